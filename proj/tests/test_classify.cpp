#include <doctest.h>

#include "oracles.hpp"
#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"
#include "thlab/classify.hpp"
#include "thlab/constructions.hpp"

using namespace thlab;

namespace {

std::vector<int> complement(int n, const std::vector<int>& a, const std::vector<int>& b = {}) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (std::find(a.begin(), a.end(), v) == a.end() &&
        std::find(b.begin(), b.end(), v) == b.end())
      out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("oracle cycle enumeration counts") {
  CHECK(oracle::cycles(oracle::adjacency(complete_graph(4))).size() == 7);
  CHECK(oracle::odd_cycles(oracle::adjacency(complete_graph(4))).size() == 4);
  CHECK(oracle::cycles(oracle::adjacency(complete_graph(5))).size() == 37);
  CHECK(oracle::odd_cycles(oracle::adjacency(complete_graph(5))).size() == 22);
  CHECK(oracle::odd_cycles(oracle::adjacency(cycle_graph(8))).empty());
}

TEST_CASE("decomposition family") {
  const auto k3 = decomposition_family(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(isomorphic(k3[0], complete_graph(2)));
  const auto k4 = decomposition_family(complete_graph(4));
  REQUIRE(k4.size() == 1);
  CHECK(isomorphic(k4[0], complete_graph(2)));

  const auto c5 = decomposition_family(cycle_graph(5));
  bool has_p4 = false;
  for (const auto& g : c5) {
    CHECK(is_bipartite(g));
    has_p4 = has_p4 || isomorphic(g, path_graph(4));
  }
  CHECK(has_p4);
  CHECK_THROWS_AS(decomposition_family(empty_graph(3)), DomainError);
}

TEST_CASE("forest in the decomposition family") {
  const auto k3 = has_forest_in_decomposition_family(complete_graph(3));
  REQUIRE(k3);
  CHECK(k3->removed().size() == 1);
  CHECK_FALSE(has_forest_in_decomposition_family(blow_up(cycle_graph(5), 2)));
  const auto c5 = has_forest_in_decomposition_family(cycle_graph(5));
  REQUIRE(c5);
  const auto rest = complement(5, c5->removed());
  CHECK(oracle::forest(oracle::adjacency(cycle_graph(5)), rest));
  CHECK_THROWS_AS(has_forest_in_decomposition_family(path_graph(4)), DomainError);
}

TEST_CASE("near-acyclic") {
  const auto a5 = oracle::adjacency(cycle_graph(5));
  const auto c5 = is_near_acyclic(cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->independent.size() == 2);
  CHECK(oracle::near_acyclic(a5, c5->independent, c5->forest));
  CHECK_FALSE(is_near_acyclic(complete_graph(3)));
  const auto c7 = is_near_acyclic(cycle_graph(7));
  REQUIRE(c7);
  CHECK(oracle::near_acyclic(oracle::adjacency(cycle_graph(7)), c7->independent, c7->forest));
}

TEST_CASE("r-near-acyclic") {
  const Graph wheel = join(complete_graph(1), cycle_graph(7));
  const auto w = is_r_near_acyclic(wheel, 4);
  REQUIRE(w);
  CHECK(w->removal.removed() == std::vector<int>{0});
  const Graph c7 = wheel.induced(complement(8, {0}));
  // remainder labels are the wheel's, shift back by one for the cycle
  std::vector<int> indep, forest_part;
  for (int v : w->remainder.independent) indep.push_back(v - 1);
  for (int v : w->remainder.forest) forest_part.push_back(v - 1);
  CHECK(oracle::near_acyclic(oracle::adjacency(c7), indep, forest_part));

  CHECK_FALSE(is_r_near_acyclic(complete_graph(4), 4));
  CHECK(is_r_near_acyclic(cycle_graph(5), 3));
  CHECK_THROWS_AS(is_r_near_acyclic(cycle_graph(5), 4), DomainError);
}

TEST_CASE("cloud-forest examples") {
  CHECK_FALSE(is_cloud_forest(complete_graph(3)));
  const auto c5 = is_cloud_forest(cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->cloud.size() == 1);
  const auto c4 = is_cloud_forest(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->cloud.size() == 1);
  CHECK(oracle::cloud_forest(oracle::adjacency(cycle_graph(4)), c4->cloud, c4->forest));

  CHECK_FALSE(is_cloud_forest_alt(complete_graph(3)));
  const auto alt = is_cloud_forest_alt(cycle_graph(5));
  REQUIRE(alt);
  CHECK(oracle::cloud_forest_alt(oracle::adjacency(cycle_graph(5)), alt->set_i, alt->set_j,
                                 alt->forest));
  const auto tree = is_cloud_forest_alt(path_graph(6));
  REQUIRE(tree);
  CHECK(tree->set_i.empty());
  CHECK(tree->set_j.empty());
  const auto pf = is_cloud_forest(path_graph(6));
  REQUIRE(pf);
  CHECK(pf->cloud.empty());
}

TEST_CASE("thundercloud examples") {
  CHECK_FALSE(is_thundercloud_forest(cycle_graph(5)));
  const auto c7 = is_thundercloud_forest(cycle_graph(7));
  REQUIRE(c7);
  CHECK(oracle::thundercloud_forest(oracle::adjacency(cycle_graph(7)), c7->cloud, c7->forest));
  // the two cloud vertices sit at distance two on the cycle
  REQUIRE(c7->cloud.size() == 2);
  const int gap = (c7->cloud[1] - c7->cloud[0] + 7) % 7;
  CHECK((gap == 2 || gap == 5));
  CHECK(is_thundercloud_forest(cycle_graph(9)));
}

TEST_CASE("recognisers agree with brute force on small graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graphs_of_order(n)) {
      const auto a = oracle::adjacency(g);
      const auto cf = is_cloud_forest(g);
      CHECK(cf.has_value() == oracle::exists_cloud_forest(a));
      if (cf) CHECK(oracle::cloud_forest(a, cf->cloud, cf->forest));
      const auto alt = is_cloud_forest_alt(g);
      CHECK(alt.has_value() == cf.has_value());
      if (alt) CHECK(oracle::cloud_forest_alt(a, alt->set_i, alt->set_j, alt->forest));
      const auto tc = is_thundercloud_forest(g);
      if (tc) {
        CHECK(oracle::thundercloud_forest(a, tc->cloud, tc->forest));
        CHECK(cf);
      }
      if (chromatic_number(g) == 3) {
        const auto na = is_near_acyclic(g);
        CHECK(na.has_value() == oracle::exists_near_acyclic(a));
        if (na) CHECK(oracle::near_acyclic(a, na->independent, na->forest));
        if (tc) CHECK(na);
        if (cf) CHECK(has_forest_in_decomposition_family(g));
      } else {
        CHECK_FALSE(is_near_acyclic(g));  // the class requires chromatic number 3
      }
      if (is_forest(g)) CHECK(cf);
    }
  }
}

TEST_CASE("classify reports every recogniser") {
  const auto r = classify(cycle_graph(5));
  CHECK(r.chromatic_number == 3);
  CHECK(r.cloud_forest);
  CHECK_FALSE(r.thundercloud_forest);
  CHECK(r.near_acyclic);
  CHECK(r.r_near_acyclic);
  CHECK(r.forest_in_decomposition_family);
  const auto p = classify(path_graph(3));
  CHECK(p.chromatic_number == 2);
  CHECK_FALSE(p.forest_in_decomposition_family);
  CHECK_FALSE(p.near_acyclic);
}
