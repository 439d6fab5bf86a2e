#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"
#include "thlab/graph_io.hpp"
#include "thlab/rational.hpp"

using namespace thlab;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3).denominator() == 3);
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("0.3") == Rational(3, 10));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("graph6 round trip agrees with a reference decoder") {
  const Graph g = parse_graph6("D?{");
  const auto ref = oracle::decode_graph6("D?{");
  CHECK(oracle::adjacency(g) == ref);
  CHECK(to_graph6(g) == "D?{");

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 70);
    const Graph r = random_graph(n, 0.3, seed);
    const std::string code = to_graph6(r);
    CHECK(oracle::adjacency(r) == oracle::decode_graph6(code));
    CHECK(to_graph6(parse_graph6(code)) == code);
  }
}

TEST_CASE("graph6 rejects malformed input with offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);      // truncated
  CHECK_THROWS_AS(parse_graph6("D?}"), ParseError);     // nonzero padding
  CHECK_THROWS_AS(parse_graph6("D?{x"), ParseError);    // trailing byte
  CHECK_THROWS_AS(parse_graph6("D?\x7f"), ParseError);  // out-of-range byte
  CHECK(parse_graph6(">>graph6<<D?{\n").order() == 5);
  try {
    parse_graph6("D? ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("3 0\n").order() == 3);
  CHECK(parse_edge_list("3 0\n").size() == 0);
  const Graph k2 = parse_edge_list("2 1\n0 1\n");
  CHECK(k2 == complete_graph(2));
  CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2\n") == complete_graph(3));
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n"), ParseError);
  const Graph pet = petersen_graph();
  CHECK(parse_edge_list(to_edge_list(pet)) == pet);
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(empty_graph(4)) == 1);
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(chromatic_number(cycle_graph(7)) == 3);
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK_THROWS_AS(chromatic_number(petersen_graph(), Budget{1}), BudgetExceeded);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Graph g = random_graph(n, 0.5, seed);
    const int chi = chromatic_number(g);
    CHECK(chi == oracle::chromatic_number(oracle::adjacency(g)));
    CHECK(chi <= g.max_degree() + 1);
    CHECK(chi >= clique_number(g));
    const auto col = optimal_coloring(g);
    for (auto [u, v] : g.edges()) CHECK(col[u] != col[v]);
    CHECK(*std::max_element(col.begin(), col.end()) + 1 == chi);
    CHECK(is_k_colorable(g, chi));
    if (chi > 1) CHECK_FALSE(is_k_colorable(g, chi - 1));
  }
}

TEST_CASE("bipartite and forest tests") {
  const auto c6 = is_bipartite(cycle_graph(6));
  REQUIRE(c6);
  CHECK(c6->first.size() == 3);
  CHECK(c6->second.size() == 3);
  CHECK_FALSE(is_forest(cycle_graph(6)));
  CHECK(is_bipartite(path_graph(4)));
  CHECK(is_forest(path_graph(4)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(8, 0.2, seed);
    std::vector<int> all(8);
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_forest(g) == oracle::forest(oracle::adjacency(g), all));
    if (is_forest(g)) CHECK(is_bipartite(g));
    CHECK(is_bipartite(g).has_value() == (oracle::chromatic_number(oracle::adjacency(g)) <= 2));
  }
}

TEST_CASE("independent set enumeration") {
  CHECK(independent_sets(cycle_graph(4)).size() == 7);
  CHECK(independent_sets(complete_graph(3)).size() == 4);
  CHECK(independent_sets(empty_graph(3)).size() == 8);

  const Graph g = random_graph(9, 0.4, 17);
  const auto sets = independent_sets(g);
  std::size_t brute = 0;
  for (VertexMask m = 0; m < (VertexMask{1} << 9); ++m) brute += is_independent(g, m);
  CHECK(sets.size() == brute);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const int a = mask_size(sets[i - 1]), b = mask_size(sets[i]);
    CHECK(a <= b);
    if (a == b)
      CHECK(mask_to_vertices(sets[i - 1]) < mask_to_vertices(sets[i]));
  }
  CHECK(independent_sets(g, 2).size() ==
        static_cast<std::size_t>(std::count_if(sets.begin(), sets.end(),
                                               [](VertexMask m) { return mask_size(m) <= 2; })));
}

TEST_CASE("two-density") {
  CHECK(two_density(complete_graph(3)) == Rational(2));
  CHECK(two_density(complete_graph(4)) == Rational(5, 2));
  CHECK(two_density(cycle_graph(5)) == Rational(4, 3));
  CHECK_THROWS_AS(two_density(complete_graph(2)), DomainError);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const Graph g = random_graph(n, 0.5, seed + 1000);
    const auto [num, den] = oracle::two_density(oracle::adjacency(g));
    CHECK(two_density(g) == Rational(num, den));
  }
}

TEST_CASE("subgraph containment matches exhaustive maps") {
  CHECK(contains_subgraph(complete_graph(4), complete_graph(3)));
  const auto pc = contains_subgraph(petersen_graph(), cycle_graph(5));
  REQUIRE(pc);
  CHECK(is_embedding(petersen_graph(), cycle_graph(5), *pc));
  CHECK_FALSE(contains_subgraph(cycle_graph(6), complete_graph(3)));

  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int hn = 1 + static_cast<int>(seed % 6);
    const int pn = 1 + static_cast<int>((seed / 6) % hn);
    const Graph host = random_graph(hn, 0.6, seed);
    const Graph pat = random_graph(pn, 0.5, seed + 77);
    const auto emb = contains_subgraph(host, pat);
    CHECK(emb.has_value() ==
          oracle::contains(oracle::adjacency(host), oracle::adjacency(pat)));
    if (emb) CHECK(is_embedding(host, pat, *emb));
  }
}

TEST_CASE("biclique counts") {
  CHECK(count_bicliques(cycle_graph(4), 2) == 1);
  CHECK(count_bicliques(complete_graph(4), 2) == 3);
  CHECK(count_bicliques(complete_bipartite(3, 3), 2) == 9);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(7, 0.6, seed);
    const auto a = oracle::adjacency(g);
    CHECK(count_bicliques(g, 1) == g.size());
    CHECK(count_bicliques(g, 2) == oracle::bicliques(a, 2));
    CHECK(count_bicliques(g, 3) == oracle::bicliques(a, 3));
  }
}

TEST_CASE("forest embedding") {
  const auto k10 = embed_forest(complete_graph(10), path_graph(3));
  REQUIRE(k10);
  CHECK(is_embedding(complete_graph(10), path_graph(3), *k10));
  CHECK_FALSE(embed_forest(empty_graph(5), complete_graph(2)));
  CHECK_THROWS_AS(embed_forest(complete_graph(5), cycle_graph(3)), DomainError);

  const auto trees = trees_of_order(5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g(40);
    while (g.size() < 200) {
      const int u = static_cast<int>(rng() % 40), v = static_cast<int>(rng() % 40);
      if (u != v) g.add_edge(u, v);
    }
    const Graph& f = trees[rng() % trees.size()];
    const auto emb = embed_forest(g, f);
    REQUIRE(emb);
    CHECK(is_embedding(g, f, *emb));
  }
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(99);
  const Graph c4 = cycle_graph(4);
  for (int i = 0; i < 20; ++i)
    CHECK(canonical_form(c4.relabel(random_perm(4, rng))) == canonical_form(c4));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));

  const Graph g = random_graph(8, 0.5, 4242);
  const std::string base = canonical_form(g);
  for (int i = 0; i < 100; ++i) CHECK(canonical_form(g.relabel(random_perm(8, rng))) == base);

  // the labelling is a permutation that produces the form
  const auto perm = canonical_labeling(g);
  CHECK(to_graph6(g.relabel(perm)) == base);

  const Graph pet = petersen_graph();
  for (int i = 0; i < 10; ++i)
    CHECK(isomorphic(pet, pet.relabel(random_perm(10, rng))));
  CHECK_FALSE(isomorphic(cycle_graph(6), Graph::from_edges(6, std::vector<std::pair<int, int>>{
                                                                   {0, 1}, {1, 2}, {2, 0},
                                                                   {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("atlas sizes") {
  // numbers of graphs and trees up to isomorphism
  const int graphs[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n < 8; ++n) CHECK(graphs_of_order(n).size() == static_cast<std::size_t>(graphs[n]));
  const int trees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(trees_of_order(n).size() == static_cast<std::size_t>(trees[n]));
}
