#include "thlab/graph.hpp"

#include <algorithm>
#include <string>

#include "thlab/errors.hpp"

namespace thlab {

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mask_size(m)));
  for_each_vertex(m, [&](int v) { out.push_back(v); });
  return out;
}

VertexMask vertices_to_mask(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaskVertices)
      throw DomainError("vertex " + std::to_string(v) + " outside mask range");
    m |= bit(v);
  }
  return m;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw DomainError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw DomainError("edge endpoint out of range");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[static_cast<std::size_t>(w)];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph Graph::induced(VertexMask vertices) const {
  auto list = mask_to_vertices(vertices);
  return induced(list);
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw DomainError("relabel: permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

bool is_embedding(const Graph& host, const Graph& pattern,
                  const Embedding& emb) {
  const int k = pattern.order();
  if (static_cast<int>(emb.map.size()) != k) return false;
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  for (int img : emb.map) {
    if (img < 0 || img >= host.order() || used[img]) return false;
    used[img] = 1;
  }
  for (auto [u, v] : pattern.edges())
    if (!host.adjacent(emb.map[u], emb.map[v])) return false;
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  const int sizes[] = {a, b};
  return complete_multipartite(sizes);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    n += part_sizes[i];
    part.insert(part.end(), static_cast<std::size_t>(part_sizes[i]),
                static_cast<int>(i));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace thlab
