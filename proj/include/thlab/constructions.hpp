#pragma once

#include <optional>
#include <vector>

#include "thlab/errors.hpp"
#include "thlab/graph.hpp"

namespace thlab {

/// Each vertex becomes an independent t-set (vertex v -> v*t .. v*t+t-1) and
/// each edge a complete bipartite K_{t,t}.
Graph blow_up(const Graph& g, int t);

/// Disjoint union plus every edge between the two parts; b's vertices follow
/// a's.
Graph join(const Graph& a, const Graph& b);

/// A tree with a chosen side: side A holds vertex 0 unless `swapped`.
struct OrientedTree {
  Graph tree;
  bool swapped = false;

  /// True iff v lies on side A.
  std::vector<bool> side_a() const;
};

struct ZykovSpec {
  std::vector<OrientedTree> trees;
  int r = 3;
  int t = 1;
};

inline constexpr int kDefaultZykovTreeCap = 10;

struct ZykovRole {
  enum class Kind { Tree, Connector, Universal };
  Kind kind = Kind::Tree;
  int index = 0;   // tree number, subset bitmask I, or universal class number
  int member = 0;  // tree-local vertex, or copy number within the class
};

/// The graph with its vertex roles.  Vertex order: the trees in turn, then
/// the connector classes S_I for I = 0 .. 2^l - 1 (bit j set when tree j is
/// in I), then the r-3 universal classes; every class has t vertices.
struct ZykovGraph {
  Graph graph;
  std::vector<ZykovRole> roles;
};

/// Builds the modified Zykov graph: tree edges; a connector for I sees side
/// A of tree j when j is in I and side B otherwise; universal vertices see
/// everything outside their own class.  DomainError on an invalid spec;
/// BudgetExceeded when the number of trees exceeds tree_cap.
ZykovGraph zykov(const ZykovSpec& spec, int tree_cap = kDefaultZykovTreeCap);

std::optional<Embedding> verify_zykov_containment(const Graph& h, const ZykovSpec& spec,
                                                  const Budget& budget = {});

struct ZykovBounds {
  int max_trees = 2;
  int max_t = 5;
  int max_tree_size = 5;
};

struct ZykovWitness {
  ZykovSpec spec;
  Embedding embedding;
};

/// First spec within bounds whose Zykov graph contains h, with r =
/// max(3, chi(h)).  Order: number of trees, then the multiset of oriented
/// trees (trees by order and canonical form, side A before the swap), then
/// t.  nullopt means "not found within bounds", which proves nothing.
std::optional<ZykovWitness> search_zykov_witness(const Graph& h, const ZykovBounds& bounds,
                                                 const Budget& budget = {});

/// Every oriented tree with at most max_size vertices, in search order.
std::vector<OrientedTree> oriented_trees(int max_size, const Budget& budget = {});

struct TemplateGraph {
  Graph graph;
  std::vector<int> set_x;
  std::vector<int> set_y;
};

/// Edges on the remaining vertices R (neither X nor Y).
struct TemplateFiller {
  int r_parts = 2;      // R is complete multipartite on this many near-equal
                        // parts; 0 makes R a clique
  int y_reach = -1;     // R-neighbours per Y vertex, a cyclic window; -1: all
  int x_reach = -1;     // R-neighbours per X vertex, the first ones; -1: all
};

/// X = vertices 0..K-1 inducing core, Y = the next floor(n/K) vertices
/// (fewer if that would leave no room, so |X|+|Y| <= n), R = the rest.  Y is
/// independent and has no edges to X.  DomainError if K != v(core), K < 1 or
/// K > n.
TemplateGraph make_template(const Graph& core, int n, int K,
                            const TemplateFiller& filler = {});

/// DomainError unless X and Y are disjoint, Y is independent and no edge
/// joins X to Y.
void validate_template(const TemplateGraph& t);

}  // namespace thlab
