#pragma once

#include <optional>
#include <vector>

#include "thlab/errors.hpp"
#include "thlab/graph.hpp"

// Recognisers for the structural classes the threshold formulas depend on.
// Every search is exhaustive over vertex subsets (order() <= 64, DomainError
// otherwise) and returns the first witness in a fixed order: candidate sets
// by increasing size, lexicographically within a size.

namespace thlab {

/// Independent cloud whose complement induces a forest; edges from the cloud
/// only reach leaves or isolated forest vertices, and no forest edge joins
/// two vertices that both see the cloud.
struct CloudForestWitness {
  std::vector<int> cloud;
  std::vector<int> forest;
};

/// Partition into independent I and J and a forest F' with no I-F' edges and
/// at most one F'-neighbour per vertex of J.
struct CloudForestAltWitness {
  std::vector<int> set_i;
  std::vector<int> set_j;
  std::vector<int> forest;
};

/// Independent part plus a forest part, with every odd cycle meeting the
/// independent part at least twice.
struct NearAcyclicWitness {
  std::vector<int> independent;
  std::vector<int> forest;
};

/// Pairwise disjoint independent sets (possibly empty) deleted together.
struct RemovalSequence {
  std::vector<std::vector<int>> sets;
  std::vector<int> removed() const;
};

struct RNearAcyclicWitness {
  RemovalSequence removal;
  NearAcyclicWitness remainder;  // labels of the original graph
};

/// Bipartite graphs left after deleting chi(h)-2 independent sets, one per
/// isomorphism class, canonically labelled and sorted by canonical form.
/// DomainError if chi(h) < 2.
std::vector<Graph> decomposition_family(const Graph& h, const Budget& budget = {});

/// A deletion leaving a forest, or nullopt.  DomainError if chi(h) < 3.
std::optional<RemovalSequence> has_forest_in_decomposition_family(
    const Graph& h, const Budget& budget = {});

std::optional<NearAcyclicWitness> is_near_acyclic(const Graph& h,
                                                  const Budget& budget = {});

/// Deleting r-3 independent sets leaves a near-acyclic graph.  DomainError
/// unless r == chi(h) >= 3.
std::optional<RNearAcyclicWitness> is_r_near_acyclic(const Graph& h, int r,
                                                     const Budget& budget = {});

std::optional<CloudForestWitness> is_cloud_forest(const Graph& h,
                                                  const Budget& budget = {});
std::optional<CloudForestAltWitness> is_cloud_forest_alt(const Graph& h,
                                                         const Budget& budget = {});
std::optional<CloudForestWitness> is_thundercloud_forest(const Graph& h,
                                                         const Budget& budget = {});

/// Every recogniser at once, for reporting.
struct ClassReport {
  int chromatic_number = 0;
  std::optional<CloudForestWitness> cloud_forest;
  std::optional<CloudForestWitness> thundercloud_forest;
  std::optional<NearAcyclicWitness> near_acyclic;
  std::optional<RNearAcyclicWitness> r_near_acyclic;        // chi >= 3 only
  std::optional<RemovalSequence> forest_in_decomposition_family;  // chi >= 3 only
};

ClassReport classify(const Graph& h, const Budget& budget = {});

}  // namespace thlab
