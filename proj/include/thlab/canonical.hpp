#pragma once

#include <string>
#include <vector>

#include "thlab/errors.hpp"
#include "thlab/graph.hpp"

namespace thlab {

/// Canonical relabelling: perm[v] is the canonical position of vertex v.
///
/// Equitable partition refinement plus individualisation, keeping the leaf
/// whose graph6 bit string is lexicographically largest.  Exact for every
/// order; branches on interchangeable twin vertices are pruned, so the work
/// stays small except on graphs with large automorphism groups.
std::vector<int> canonical_labeling(const Graph& g, const Budget& budget = {});

/// graph6 bytes of the canonically relabelled graph: equal iff isomorphic.
std::string canonical_form(const Graph& g, const Budget& budget = {});

Graph canonical_graph(const Graph& g, const Budget& budget = {});

bool isomorphic(const Graph& a, const Graph& b, const Budget& budget = {});

/// All graphs on exactly n vertices up to isomorphism, canonically labelled
/// and sorted by canonical form.
std::vector<Graph> graphs_of_order(int n, const Budget& budget = {});

/// All trees on exactly n >= 1 vertices up to isomorphism, same conventions.
std::vector<Graph> trees_of_order(int n, const Budget& budget = {});

}  // namespace thlab
