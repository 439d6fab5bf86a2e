#include "thlab/constructions.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"

namespace thlab {

Graph blow_up(const Graph& g, int t) {
  if (t < 1) throw DomainError("blow_up needs t >= 1");
  Graph out(g.order() * t);
  for (auto [u, v] : g.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) out.add_edge(u * t + i, v * t + j);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  Graph out(na + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, na + v);
  return out;
}

std::vector<bool> OrientedTree::side_a() const {
  const int n = tree.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : tree.neighbours(v))
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        }
    }
  }
  std::vector<bool> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = (side[v] == 0) != swapped;
  return out;
}

namespace {

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_forest(g);
}

}  // namespace

ZykovGraph zykov(const ZykovSpec& spec, int tree_cap) {
  const int ell = static_cast<int>(spec.trees.size());
  if (spec.r < 3) throw DomainError("zykov needs r >= 3");
  if (spec.t < 1) throw DomainError("zykov needs t >= 1");
  for (const auto& ot : spec.trees)
    if (!is_tree(ot.tree)) throw DomainError("zykov: listed graph is not a tree");
  if (ell > tree_cap) throw BudgetExceeded("zykov (2^l connector classes)", tree_cap);

  const int t = spec.t;
  const int subsets = 1 << ell;
  std::vector<int> tree_start;
  int tree_vertices = 0;
  for (const auto& ot : spec.trees) {
    tree_start.push_back(tree_vertices);
    tree_vertices += ot.tree.order();
  }
  const int connector_start = tree_vertices;
  const int universal_start = connector_start + subsets * t;
  const int total = universal_start + (spec.r - 3) * t;

  std::vector<std::vector<bool>> sides;
  for (const auto& ot : spec.trees) sides.push_back(ot.side_a());

  ZykovGraph z{Graph(total), std::vector<ZykovRole>(static_cast<std::size_t>(total))};
  for (int j = 0; j < ell; ++j) {
    const Graph& tree = spec.trees[j].tree;
    for (int v = 0; v < tree.order(); ++v)
      z.roles[tree_start[j] + v] = {ZykovRole::Kind::Tree, j, v};
    for (auto [u, v] : tree.edges()) z.graph.add_edge(tree_start[j] + u, tree_start[j] + v);
  }
  for (int mask = 0; mask < subsets; ++mask) {
    for (int c = 0; c < t; ++c) {
      const int x = connector_start + mask * t + c;
      z.roles[x] = {ZykovRole::Kind::Connector, mask, c};
      for (int j = 0; j < ell; ++j) {
        const bool want_a = (mask >> j) & 1;
        for (int v = 0; v < spec.trees[j].tree.order(); ++v)
          if (sides[j][v] == want_a) z.graph.add_edge(x, tree_start[j] + v);
      }
    }
  }
  for (int w = 0; w < spec.r - 3; ++w) {
    for (int c = 0; c < t; ++c) {
      const int x = universal_start + w * t + c;
      z.roles[x] = {ZykovRole::Kind::Universal, w, c};
      for (int y = 0; y < total; ++y) {
        const bool same_class = y >= universal_start && (y - universal_start) / t == w;
        if (!same_class && !z.graph.adjacent(x, y)) z.graph.add_edge(x, y);
      }
    }
  }
  return z;
}

std::optional<Embedding> verify_zykov_containment(const Graph& h, const ZykovSpec& spec,
                                                  const Budget& budget) {
  return contains_subgraph(zykov(spec).graph, h, budget);
}

std::vector<OrientedTree> oriented_trees(int max_size, const Budget& budget) {
  std::vector<OrientedTree> out;
  for (int s = 1; s <= max_size; ++s)
    for (Graph& tree : trees_of_order(s, budget)) {
      out.push_back({tree, false});
      out.push_back({std::move(tree), true});
    }
  return out;
}

std::optional<ZykovWitness> search_zykov_witness(const Graph& h, const ZykovBounds& bounds,
                                                 const Budget& budget) {
  if (bounds.max_trees < 0 || bounds.max_t < 1 || bounds.max_tree_size < 1)
    throw DomainError("search_zykov_witness needs finite positive bounds");
  ZykovSpec spec;
  spec.r = std::max(3, chromatic_number(h, budget));
  const auto pool = oriented_trees(bounds.max_tree_size, budget);
  const int kinds = static_cast<int>(pool.size());

  for (int ell = 0; ell <= bounds.max_trees; ++ell) {
    std::vector<int> pick(static_cast<std::size_t>(ell), 0);
    while (true) {
      spec.trees.clear();
      for (int i : pick) spec.trees.push_back(pool[static_cast<std::size_t>(i)]);
      // Zykov graphs grow with t, so a miss at max_t rules out every t.
      spec.t = bounds.max_t;
      if (verify_zykov_containment(h, spec, budget)) {
        for (int t = 1; t <= bounds.max_t; ++t) {
          spec.t = t;
          if (auto emb = verify_zykov_containment(h, spec, budget))
            return ZykovWitness{spec, std::move(*emb)};
        }
      }
      // Next non-decreasing index tuple.
      int i = ell - 1;
      while (i >= 0 && pick[i] == kinds - 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int k = i + 1; k < ell; ++k) pick[k] = pick[i];
    }
  }
  return std::nullopt;
}

TemplateGraph make_template(const Graph& core, int n, int K, const TemplateFiller& filler) {
  if (K < 1 || K > n) throw DomainError("make_template needs 1 <= K <= n");
  if (core.order() != K) throw DomainError("make_template: core must have exactly K vertices");
  const int y_count = std::min(n / K, n - K);
  const int r_start = K + y_count;
  const int r_count = n - r_start;

  TemplateGraph tg{Graph(n), {}, {}};
  for (int v = 0; v < K; ++v) tg.set_x.push_back(v);
  for (int v = K; v < r_start; ++v) tg.set_y.push_back(v);
  for (auto [u, v] : core.edges()) tg.graph.add_edge(u, v);

  for (int i = 0; i < r_count; ++i)
    for (int j = i + 1; j < r_count; ++j)
      if (filler.r_parts == 0 || i % filler.r_parts != j % filler.r_parts)
        tg.graph.add_edge(r_start + i, r_start + j);

  if (r_count > 0) {
    const int y_reach =
        filler.y_reach < 0 ? r_count : std::min(filler.y_reach, r_count);
    for (int i = 0; i < y_count; ++i)
      for (int k = 0; k < y_reach; ++k)
        tg.graph.add_edge(K + i, r_start + (i * y_reach + k) % r_count);
    const int x_reach =
        filler.x_reach < 0 ? r_count : std::min(filler.x_reach, r_count);
    for (int v = 0; v < K; ++v)
      for (int k = 0; k < x_reach; ++k) tg.graph.add_edge(v, r_start + k);
  }
  validate_template(tg);
  return tg;
}

void validate_template(const TemplateGraph& t) {
  std::vector<char> in_x(static_cast<std::size_t>(t.graph.order()), 0);
  for (int v : t.set_x) in_x.at(static_cast<std::size_t>(v)) = 1;
  for (int v : t.set_y) {
    if (in_x.at(static_cast<std::size_t>(v))) throw DomainError("template: X and Y overlap");
    for (int w : t.graph.neighbours(v)) {
      if (in_x[w]) throw DomainError("template: edge between X and Y");
      if (std::find(t.set_y.begin(), t.set_y.end(), w) != t.set_y.end())
        throw DomainError("template: edge inside Y");
    }
  }
}

}  // namespace thlab
