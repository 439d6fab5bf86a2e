#include "thlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thlab/graph_io.hpp"

namespace thlab {
namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, const Budget& budget)
      : g_(g), n_(g.order()), counter_(budget, "canonical_form") {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    Cells start(1);
    for (int v = 0; v < n_; ++v) start[0].push_back(v);
    explore(std::move(start));
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) perm[best_order_[pos]] = pos;
    return perm;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable.  The
  // result depends only on the isomorphism type of (graph, partition).
  void refine(Cells& cells) {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig(cells.size(), 0);
          for (int w : g_.neighbours(v)) ++sig[static_cast<std::size_t>(cell_of[w])];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t i = 0;
        while (i < keyed.size()) {
          std::size_t j = i;
          std::vector<int> part;
          while (j < keyed.size() && keyed[j].first == keyed[i].first)
            part.push_back(keyed[j++].second);
          next.push_back(std::move(part));
          i = j;
        }
      }
      const bool split = next.size() != cells.size();
      cells = std::move(next);
      if (!split) return;
    }
  }

  // Same neighbourhood apart from each other: swapping them is an
  // automorphism fixing everything else.
  bool twins(int u, int w) const {
    auto ru = g_.row(u);
    auto rw = g_.row(w);
    const std::uint64_t ubit = std::uint64_t{1} << (u & 63);
    const std::uint64_t wbit = std::uint64_t{1} << (w & 63);
    for (std::size_t x = 0; x < ru.size(); ++x) {
      std::uint64_t a = ru[x], b = rw[x];
      if (static_cast<int>(x) == (u >> 6)) a &= ~ubit, b &= ~ubit;
      if (static_cast<int>(x) == (w >> 6)) a &= ~wbit, b &= ~wbit;
      if (a != b) return false;
    }
    return true;
  }

  void explore(Cells cells) {
    counter_.tick();
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) order[i] = cells[static_cast<std::size_t>(i)][0];
      consider(order);
      return;
    }
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> tried;
    for (int v : cells[target]) {
      bool redundant = false;
      for (int w : tried)
        if (twins(v, w)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      explore(std::move(child));
    }
  }

  // Certificate: graph6 upper-triangle bit order under the leaf's ordering.
  void consider(const std::vector<int>& order) {
    std::vector<char> cert;
    cert.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) cert.push_back(g_.adjacent(order[i], order[j]) ? 1 : 0);
    if (best_order_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = order;
    }
  }

  const Graph& g_;
  int n_;
  NodeCounter counter_;
  std::vector<char> best_cert_;
  std::vector<int> best_order_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, const Budget& budget) {
  Canonizer c(g, budget);
  return c.run();
}

Graph canonical_graph(const Graph& g, const Budget& budget) {
  return g.relabel(canonical_labeling(g, budget));
}

std::string canonical_form(const Graph& g, const Budget& budget) {
  return to_graph6(canonical_graph(g, budget));
}

bool isomorphic(const Graph& a, const Graph& b, const Budget& budget) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, budget) == canonical_form(b, budget);
}

namespace {

// Extends every graph in `smaller` by a new last vertex whose neighbourhood
// ranges over `options`, deduplicating by canonical form.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, int n,
                                    const std::vector<VertexMask>& options,
                                    const Budget& budget) {
  std::map<std::string, Graph> seen;
  for (const Graph& base : smaller) {
    const auto base_edges = base.edges();
    for (VertexMask nb : options) {
      Graph g(n);
      for (auto [u, v] : base_edges) g.add_edge(u, v);
      for_each_vertex(nb, [&](int u) { g.add_edge(u, n - 1); });
      Graph canon = canonical_graph(g, budget);
      seen.try_emplace(to_graph6(canon), std::move(canon));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, graph] : seen) out.push_back(std::move(graph));
  return out;
}

}  // namespace

std::vector<Graph> graphs_of_order(int n, const Budget& budget) {
  if (n < 0) throw DomainError("negative order");
  if (n > 10) throw DomainError("graphs_of_order supports n <= 10");
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::vector<VertexMask> options;
    for (VertexMask nb = 0; nb < (VertexMask{1} << (k - 1)); ++nb) options.push_back(nb);
    level = extend_by_vertex(level, k, options, budget);
  }
  return level;
}

std::vector<Graph> trees_of_order(int n, const Budget& budget) {
  if (n < 1) throw DomainError("trees need at least one vertex");
  if (n > 20) throw DomainError("trees_of_order supports n <= 20");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<VertexMask> options;
    for (int u = 0; u < k - 1; ++u) options.push_back(bit(u));
    level = extend_by_vertex(level, k, options, budget);
  }
  return level;
}

}  // namespace thlab
