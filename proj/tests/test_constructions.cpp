#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"
#include "thlab/classify.hpp"
#include "thlab/constructions.hpp"

using namespace thlab;

namespace {

Graph edge() { return complete_graph(2); }

}  // namespace

TEST_CASE("blow-ups and joins") {
  CHECK(isomorphic(blow_up(edge(), 2), cycle_graph(4)));
  const Graph c5 = blow_up(cycle_graph(5), 2);
  CHECK(c5.order() == 10);
  CHECK(c5.size() == 20);
  CHECK(blow_up(petersen_graph(), 1) == petersen_graph());
  CHECK_THROWS_AS(blow_up(edge(), 0), DomainError);

  const Graph w7 = join(complete_graph(1), cycle_graph(7));
  CHECK(w7.order() == 8);
  CHECK(w7.size() == 14);
  CHECK(join(complete_graph(1), complete_graph(1)) == edge());
}

TEST_CASE("blow-up keeps the chromatic number and contains the original") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 7; ++n) {
    const auto atlas = graphs_of_order(n);
    for (int k = 0; k < 6; ++k) {
      const Graph& g = atlas[rng() % atlas.size()];
      for (int t = 1; t <= 3; ++t) {
        const Graph b = blow_up(g, t);
        CHECK(chromatic_number(b) == chromatic_number(g));
        Embedding reps;
        for (int v = 0; v < n; ++v) reps.map.push_back(v * t + static_cast<int>(rng() % t));
        CHECK(is_embedding(b, g, reps));
      }
    }
  }
}

TEST_CASE("Zykov graph of one edge is the 4-path") {
  ZykovSpec spec;
  spec.trees.push_back({edge(), false});
  const auto z = zykov(spec);
  CHECK(isomorphic(z.graph, path_graph(4)));
  // u_{1} sees side A (vertex 0), u_{} sees side B
  CHECK(z.graph.adjacent(3, 0));
  CHECK(z.graph.adjacent(2, 1));
}

TEST_CASE("Zykov vertex count and roles") {
  ZykovSpec spec;
  spec.trees = {{edge(), false}, {edge(), false}};
  spec.r = 4;
  spec.t = 2;
  CHECK(zykov(spec).graph.order() == 14);

  const auto trees = oriented_trees(5);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    ZykovSpec s;
    const int l = 1 + static_cast<int>(rng() % 3);
    int tree_vertices = 0;
    for (int j = 0; j < l; ++j) {
      s.trees.push_back(trees[rng() % trees.size()]);
      tree_vertices += s.trees.back().tree.order();
    }
    s.r = 3 + static_cast<int>(rng() % 3);
    s.t = 1 + static_cast<int>(rng() % 3);
    const auto z = zykov(s);
    const Graph& g = z.graph;
    REQUIRE(g.order() == tree_vertices + ((1 << l) + s.r - 3) * s.t);
    REQUIRE(z.roles.size() == static_cast<std::size_t>(g.order()));

    std::vector<std::vector<bool>> side;
    for (const auto& ot : s.trees) side.push_back(ot.side_a());
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        const auto& a = z.roles[u];
        const auto& b = z.roles[v];
        const bool same_class = a.kind == b.kind && a.index == b.index &&
                                a.kind != ZykovRole::Kind::Tree;
        if (same_class) CHECK_FALSE(g.adjacent(u, v));
        if (a.kind == ZykovRole::Kind::Universal || b.kind == ZykovRole::Kind::Universal) {
          if (!same_class) CHECK(g.adjacent(u, v));
          continue;
        }
        const ZykovRole* conn = a.kind == ZykovRole::Kind::Connector ? &a
                                : b.kind == ZykovRole::Kind::Connector ? &b : nullptr;
        const ZykovRole* tree = a.kind == ZykovRole::Kind::Tree ? &a
                                : b.kind == ZykovRole::Kind::Tree ? &b : nullptr;
        if (conn && tree) {
          const bool in_i = (conn->index >> tree->index) & 1;
          const bool on_a = side[tree->index][tree->member];
          CHECK(g.adjacent(u, v) == (in_i == on_a));
        }
        if (a.kind == ZykovRole::Kind::Connector && b.kind == ZykovRole::Kind::Connector)
          CHECK_FALSE(g.adjacent(u, v));
      }
  }
}

TEST_CASE("Zykov spec validation") {
  ZykovSpec bad;
  bad.trees.push_back({cycle_graph(3), false});
  CHECK_THROWS_AS(zykov(bad), DomainError);
  ZykovSpec low_r;
  low_r.trees.push_back({edge(), false});
  low_r.r = 2;
  CHECK_THROWS_AS(zykov(low_r), DomainError);
  ZykovSpec many;
  for (int i = 0; i < 11; ++i) many.trees.push_back({edge(), false});
  CHECK_THROWS_AS(zykov(many), BudgetExceeded);
}

TEST_CASE("Zykov containment") {
  ZykovSpec p5;
  p5.trees.push_back({path_graph(5), false});
  p5.t = 2;
  const auto z = zykov(p5);
  const auto emb = verify_zykov_containment(cycle_graph(7), p5);
  CHECK(emb.has_value() ==
        oracle::contains(oracle::adjacency(z.graph), oracle::adjacency(cycle_graph(7))));
  if (emb) CHECK(is_embedding(z.graph, cycle_graph(7), *emb));

  for (const auto& ot : oriented_trees(4)) {
    ZykovSpec s;
    s.trees.push_back(ot);
    CHECK_FALSE(verify_zykov_containment(complete_graph(3), s));
    CHECK(verify_zykov_containment(edge(), s));
  }
}

TEST_CASE("Zykov witness search") {
  const auto c5 = search_zykov_witness(cycle_graph(5), {2, 5, 5});
  REQUIRE(c5);
  CHECK(is_embedding(zykov(c5->spec).graph, cycle_graph(5), c5->embedding));
  CHECK_FALSE(search_zykov_witness(complete_graph(3), {2, 3, 4}));
  const auto k2 = search_zykov_witness(edge(), {1, 1, 2});
  REQUIRE(k2);
  CHECK(k2->spec.trees.size() == 1);
  CHECK(k2->spec.t == 1);
}

TEST_CASE("oriented trees come in both orientations") {
  const auto ts = oriented_trees(4);
  // trees on 1..4 vertices: 1+1+1+2, each in two orientations
  CHECK(ts.size() == 10);
  for (std::size_t i = 0; i + 1 < ts.size(); i += 2) {
    CHECK(ts[i].tree == ts[i + 1].tree);
    CHECK_FALSE(ts[i].swapped);
    CHECK(ts[i + 1].swapped);
  }
}

TEST_CASE("templates") {
  const auto t = make_template(complete_graph(3), 12, 3);
  CHECK(t.set_x == std::vector<int>{0, 1, 2});
  CHECK(t.set_y.size() == 4);
  CHECK(t.graph.induced(t.set_x) == complete_graph(3));
  for (int x : t.set_x)
    for (int y : t.set_y) CHECK_FALSE(t.graph.adjacent(x, y));
  CHECK(is_independent(t.graph, vertices_to_mask(t.set_y)));
  CHECK_NOTHROW(validate_template(t));

  const Graph c5 = cycle_graph(5);
  const auto t5 = make_template(c5, 40, 5, {3, -1, -1});
  CHECK(chromatic_number(t5.graph.induced(t5.set_x)) == chromatic_number(c5));

  auto broken = t;
  broken.graph.add_edge(t.set_x[0], t.set_y[0]);
  CHECK_THROWS_AS(validate_template(broken), DomainError);
  CHECK_THROWS_AS(make_template(complete_graph(3), 12, 4), DomainError);
}
