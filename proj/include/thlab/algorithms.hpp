#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "thlab/errors.hpp"
#include "thlab/graph.hpp"
#include "thlab/rational.hpp"

namespace thlab {

/// Exact chromatic number (0 for the empty graph) by DSATUR branch and bound,
/// seeded with a greedy clique (lower bound, pre-coloured) and a greedy
/// DSATUR colouring (upper bound).
int chromatic_number(const Graph& g, const Budget& budget = {});

/// An optimal proper colouring: colour[v] in 0..chi-1.
std::vector<int> optimal_coloring(const Graph& g, const Budget& budget = {});

/// True iff g admits a proper colouring with k colours.
bool is_k_colorable(const Graph& g, int k, const Budget& budget = {});

/// Two-colouring parts, or nullopt.  Each component's lowest vertex goes to
/// the first part.
struct Bipartition {
  std::vector<int> first;
  std::vector<int> second;
};
std::optional<Bipartition> is_bipartite(const Graph& g);
bool is_forest(const Graph& g);

// Mask variants over the subgraph induced on `within` (order() <= 64).
bool is_forest_within(const Graph& g, VertexMask within);
bool is_bipartite_within(const Graph& g, VertexMask within);
bool is_independent(const Graph& g, VertexMask set);

/// Lazily enumerates the independent sets of g (order() <= 64) by increasing
/// size and lexicographically within a size, starting with the empty set.
class IndependentSets {
 public:
  explicit IndependentSets(const Graph& g, std::optional<int> max_size = {},
                           VertexMask within = ~VertexMask{0});

  /// Next set, or nullopt once exhausted.
  std::optional<VertexMask> next();

 private:
  bool descend();

  const Graph* g_;
  int max_size_;
  VertexMask universe_;
  int size_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool need_init_ = false;
  bool found_at_size_ = false;
  std::vector<int> chosen_;
  std::vector<VertexMask> candidates_;  // candidates_[d]: options at depth d
};

std::vector<VertexMask> independent_sets(const Graph& g,
                                         std::optional<int> max_size = {});

/// Calls fn(subset) on every subset of `universe` with size <= max_size, by
/// increasing size then lexicographically; stops when fn returns true.
/// Returns whether it was stopped.
template <class Fn>
bool for_each_subset_by_size(VertexMask universe, int max_size, Fn&& fn) {
  const auto items = mask_to_vertices(universe);
  const int n = static_cast<int>(items.size());
  if (max_size > n) max_size = n;
  std::vector<int> idx;
  for (int k = 0; k <= max_size; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexMask m = 0;
      for (int i : idx) m |= bit(items[static_cast<std::size_t>(i)]);
      if (fn(m)) return true;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

/// max over vertex subsets F with |F| >= 3 of (e(F) - 1) / (|F| - 2), taken
/// over induced subgraphs.  DomainError if order() < 3.
Rational two_density(const Graph& g, const Budget& budget = {});

/// A (not necessarily induced) copy of pattern in host, or nullopt.
std::optional<Embedding> contains_subgraph(const Graph& host,
                                           const Graph& pattern,
                                           const Budget& budget = {});

/// A k-clique of g (sorted, lexicographically first), or nullopt.
std::optional<std::vector<int>> find_clique(const Graph& g, int k,
                                            const Budget& budget = {});
std::optional<std::vector<int>> find_clique_within(const Graph& g,
                                                   std::span<const int> among,
                                                   int k,
                                                   const Budget& budget = {});
int clique_number(const Graph& g, const Budget& budget = {});

/// Number of unordered copies of K_{s,s} in g.
std::uint64_t count_bicliques(const Graph& g, int s, const Budget& budget = {});

/// Embeds forest f into g by peeling g to its core of minimum degree >= v(f)
/// and growing f greedily inside it; falls back to exact search when the
/// core is empty.  DomainError if f is not a forest.
std::optional<Embedding> embed_forest(const Graph& g, const Graph& f,
                                      const Budget& budget = {});

/// Vertices surviving repeated deletion of vertices with degree < k.
std::vector<int> degree_core(const Graph& g, int k);

}  // namespace thlab
