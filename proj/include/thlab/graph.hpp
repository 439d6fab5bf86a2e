#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace thlab {

/// Vertex subset of a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaskVertices = 64;

inline int mask_size(VertexMask m) noexcept { return std::popcount(m); }

inline VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

inline VertexMask low_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

template <class Fn>
void for_each_vertex(VertexMask m, Fn&& fn) {
  while (m) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const int> vertices);

/// Finite simple undirected graph on vertices 0..n-1, stored as a dense
/// symmetric bit matrix (one row of 64-bit words per vertex).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept;  // edge count

  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1U;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const noexcept;
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  /// Adjacency row of v as 64-bit words; bit w of the row is adjacency to w.
  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int words() const noexcept { return words_; }

  /// Neighbourhood of v as a mask.  Requires order() <= 64.
  VertexMask mask(int v) const noexcept {
    return words_ == 0 ? 0 : bits_[static_cast<std::size_t>(v) * words_];
  }
  bool fits_mask() const noexcept { return n_ <= kMaskVertices; }

  std::vector<int> neighbours(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;
  Graph induced(VertexMask vertices) const;

  /// Relabelled copy: vertex v of *this becomes vertex perm[v].
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Injective vertex map from a pattern into a host: map[p] is the host image
/// of pattern vertex p.
struct Embedding {
  std::vector<int> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff emb is injective into host and carries every pattern edge onto a
/// host edge.
bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

// Named graphs.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph petersen_graph();

}  // namespace thlab
