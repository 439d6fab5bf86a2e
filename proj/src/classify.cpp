#include "thlab/classify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"

namespace thlab {
namespace {

void require_mask(const Graph& h, const char* op) {
  if (!h.fits_mask())
    throw DomainError(std::string(op) + " is exhaustive and supports at most 64 vertices");
}

// Every union S of at most k independent sets, i.e. chi(h[S]) <= k, in
// size-then-lexicographic order.  fn returns true to stop.
template <class Fn>
bool for_each_removal(const Graph& h, int k, NodeCounter& counter,
                      const Budget& budget, Fn&& fn) {
  const VertexMask all = low_mask(h.order());
  if (k <= 0) return fn(VertexMask{0});
  return for_each_subset_by_size(all, h.order(), [&](VertexMask s) {
    counter.tick();
    if (k == 1) {
      if (!is_independent(h, s)) return false;
    } else if (mask_size(s) > k && !is_k_colorable(h.induced(s), k, budget)) {
      return false;
    }
    return fn(s);
  });
}

// Splits s into exactly k colour classes of h[s] (some possibly empty).
RemovalSequence split_removal(const Graph& h, VertexMask s, int k,
                              const Budget& budget) {
  RemovalSequence seq;
  seq.sets.resize(static_cast<std::size_t>(std::max(k, 0)));
  if (s == 0) return seq;
  const auto members = mask_to_vertices(s);
  const auto colour = optimal_coloring(h.induced(s), budget);
  for (std::size_t i = 0; i < members.size(); ++i)
    seq.sets[static_cast<std::size_t>(colour[i])].push_back(members[i]);
  return seq;
}

// Given that the complement of `cloud` is acyclic: every odd cycle meets the
// cloud at least twice iff adding any single cloud vertex back keeps it
// bipartite.
bool odd_cycles_meet_twice(const Graph& h, VertexMask cloud, VertexMask rest) {
  bool ok = true;
  for_each_vertex(cloud, [&](int v) {
    if (ok && !is_bipartite_within(h, rest | bit(v))) ok = false;
  });
  return ok;
}

bool cloud_attachments_ok(const Graph& h, VertexMask cloud, VertexMask forest) {
  VertexMask touched = 0;
  bool ok = true;
  for_each_vertex(forest, [&](int v) {
    if (!(h.mask(v) & cloud)) return;
    touched |= bit(v);
    if (mask_size(h.mask(v) & forest) > 1) ok = false;
  });
  if (!ok) return false;
  for_each_vertex(touched, [&](int v) {
    if (h.mask(v) & touched) ok = false;
  });
  return ok;
}

template <class Accept>
std::optional<CloudForestWitness> search_cloud(const Graph& h, const Budget& budget,
                                               const char* op, Accept&& accept) {
  require_mask(h, op);
  NodeCounter counter(budget, op);
  const VertexMask all = low_mask(h.order());
  IndependentSets sets(h);
  while (auto cloud = sets.next()) {
    counter.tick();
    const VertexMask forest = all & ~*cloud;
    if (!is_forest_within(h, forest)) continue;
    if (!cloud_attachments_ok(h, *cloud, forest)) continue;
    if (!accept(*cloud, forest)) continue;
    return CloudForestWitness{mask_to_vertices(*cloud), mask_to_vertices(forest)};
  }
  return std::nullopt;
}

// First independent I inside `within` whose complement (inside `within`) is a
// forest met twice by every odd cycle.
std::optional<NearAcyclicWitness> near_acyclic_partition(const Graph& h,
                                                         VertexMask within,
                                                         NodeCounter& counter) {
  IndependentSets sets(h, std::nullopt, within);
  while (auto cloud = sets.next()) {
    counter.tick();
    const VertexMask rest = within & ~*cloud;
    if (!is_forest_within(h, rest)) continue;
    if (!odd_cycles_meet_twice(h, *cloud, rest)) continue;
    return NearAcyclicWitness{mask_to_vertices(*cloud), mask_to_vertices(rest)};
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> RemovalSequence::removed() const {
  std::vector<int> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> decomposition_family(const Graph& h, const Budget& budget) {
  require_mask(h, "decomposition_family");
  const int r = chromatic_number(h, budget);
  if (r < 2) throw DomainError("decomposition family needs chromatic number >= 2");
  NodeCounter counter(budget, "decomposition_family");
  const VertexMask all = low_mask(h.order());
  std::map<std::string, Graph> family;
  for_each_removal(h, r - 2, counter, budget, [&](VertexMask s) {
    const VertexMask rest = all & ~s;
    if (is_bipartite_within(h, rest)) {
      Graph g = canonical_graph(h.induced(rest), budget);
      family.try_emplace(canonical_form(g, budget), std::move(g));
    }
    return false;
  });
  std::vector<Graph> out;
  for (auto& [key, g] : family) out.push_back(std::move(g));
  return out;
}

std::optional<RemovalSequence> has_forest_in_decomposition_family(const Graph& h,
                                                                  const Budget& budget) {
  require_mask(h, "has_forest_in_decomposition_family");
  const int r = chromatic_number(h, budget);
  if (r < 3) throw DomainError("forest test needs chromatic number >= 3");
  NodeCounter counter(budget, "has_forest_in_decomposition_family");
  const VertexMask all = low_mask(h.order());
  std::optional<VertexMask> found;
  // Colourability of S is the expensive test, so check the remainder first.
  for_each_subset_by_size(all, h.order(), [&](VertexMask s) {
    counter.tick();
    if (!is_forest_within(h, all & ~s)) return false;
    if (r - 2 == 1 ? !is_independent(h, s)
                   : mask_size(s) > r - 2 && !is_k_colorable(h.induced(s), r - 2, budget))
      return false;
    found = s;
    return true;
  });
  if (!found) return std::nullopt;
  return split_removal(h, *found, r - 2, budget);
}

std::optional<NearAcyclicWitness> is_near_acyclic(const Graph& h, const Budget& budget) {
  require_mask(h, "is_near_acyclic");
  if (chromatic_number(h, budget) != 3) return std::nullopt;
  NodeCounter counter(budget, "is_near_acyclic");
  return near_acyclic_partition(h, low_mask(h.order()), counter);
}

std::optional<RNearAcyclicWitness> is_r_near_acyclic(const Graph& h, int r,
                                                     const Budget& budget) {
  require_mask(h, "is_r_near_acyclic");
  if (r < 3 || chromatic_number(h, budget) != r)
    throw DomainError("is_r_near_acyclic needs r == chromatic number >= 3");
  NodeCounter counter(budget, "is_r_near_acyclic");
  const VertexMask all = low_mask(h.order());
  std::optional<RNearAcyclicWitness> out;
  // With chi(h) = r and chi(h[S]) <= r-3 the remainder has chi >= 3, and a
  // valid partition caps it at 3, so no separate colouring test is needed.
  for_each_removal(h, r - 3, counter, budget, [&](VertexMask s) {
    auto part = near_acyclic_partition(h, all & ~s, counter);
    if (!part) return false;
    out = RNearAcyclicWitness{split_removal(h, s, r - 3, budget), std::move(*part)};
    return true;
  });
  return out;
}

std::optional<CloudForestWitness> is_cloud_forest(const Graph& h, const Budget& budget) {
  return search_cloud(h, budget, "is_cloud_forest",
                      [](VertexMask, VertexMask) { return true; });
}

std::optional<CloudForestWitness> is_thundercloud_forest(const Graph& h,
                                                         const Budget& budget) {
  return search_cloud(h, budget, "is_thundercloud_forest",
                      [&](VertexMask cloud, VertexMask forest) {
                        return odd_cycles_meet_twice(h, cloud, forest);
                      });
}

std::optional<CloudForestAltWitness> is_cloud_forest_alt(const Graph& h,
                                                         const Budget& budget) {
  require_mask(h, "is_cloud_forest_alt");
  NodeCounter counter(budget, "is_cloud_forest_alt");
  const VertexMask all = low_mask(h.order());
  IndependentSets clouds(h);
  while (auto set_i = clouds.next()) {
    // F' may not touch I, so every neighbour of I lies in J.
    VertexMask forced = 0;
    for_each_vertex(*set_i, [&](int v) { forced |= h.mask(v); });
    if (!is_independent(h, forced)) continue;
    VertexMask free = all & ~*set_i & ~forced;
    for_each_vertex(forced, [&](int v) { free &= ~h.mask(v); });
    IndependentSets extras(h, std::nullopt, free);
    while (auto extra = extras.next()) {
      counter.tick();
      const VertexMask set_j = forced | *extra;
      const VertexMask forest = all & ~*set_i & ~set_j;
      if (!is_forest_within(h, forest)) continue;
      bool ok = true;
      for_each_vertex(set_j, [&](int v) {
        if (mask_size(h.mask(v) & forest) > 1) ok = false;
      });
      if (!ok) continue;
      return CloudForestAltWitness{mask_to_vertices(*set_i), mask_to_vertices(set_j),
                                   mask_to_vertices(forest)};
    }
  }
  return std::nullopt;
}

ClassReport classify(const Graph& h, const Budget& budget) {
  ClassReport rep;
  rep.chromatic_number = chromatic_number(h, budget);
  rep.cloud_forest = is_cloud_forest(h, budget);
  rep.thundercloud_forest = is_thundercloud_forest(h, budget);
  rep.near_acyclic = is_near_acyclic(h, budget);
  if (rep.chromatic_number >= 3) {
    rep.r_near_acyclic = is_r_near_acyclic(h, rep.chromatic_number, budget);
    rep.forest_in_decomposition_family = has_forest_in_decomposition_family(h, budget);
  }
  return rep;
}

}  // namespace thlab
