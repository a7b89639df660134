#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "wreath/constructions.hpp"
#include "wreath/generators.hpp"
#include "wreath/symmetry.hpp"

using namespace wreath;

TEST_CASE("group order from generators") {
  // S_3 on 3 points
  CHECK(group_order({{1, 0, 2}, {1, 2, 0}}, 3) == 6);
  // cyclic rotation on 5 points
  CHECK(group_order({{1, 2, 3, 4, 0}}, 5) == 5);
  CHECK(group_order({}, 4) == 1);
  CHECK(group_order({{0, 1, 2, 3}}, 4) == 1);
}

TEST_CASE("automorphism groups of standard complexes") {
  CHECK(automorphism_group(simplex_boundary(3)).order == 24);
  CHECK(automorphism_group(cycle(5)).order == 10);
  CHECK(automorphism_group(cycle(6)).order == 12);
  CHECK(automorphism_group(path(4)).order == 2);
  auto g = automorphism_group(cycle(5));
  CHECK(g.complete);
  // generators act on facets
  for (const auto& p : g.generators) {
    auto relabeled = rename_vertices(cycle(5), [&] {
      std::map<VertexLabel, VertexLabel> m;
      for (std::size_t i = 0; i < g.domain.size(); ++i) m[g.domain[i]] = g.domain[p[i]];
      return m;
    }());
    CHECK(relabeled == cycle(5));
  }
}

TEST_CASE("vertex transitivity") {
  CHECK(is_vertex_transitive(cycle(5)));
  CHECK(is_vertex_transitive(cross_polytope_boundary(3)));
  CHECK_FALSE(is_vertex_transitive(path(4)));
}

TEST_CASE("wreath group generators and order") {
  auto s0 = testsupport::two_points();
  auto aut_s0 = automorphism_group(s0);
  CHECK(aut_s0.order == 2);

  auto wg = wreath_group_generators(1, s0, aut_s0);
  CHECK(wg.order == 8);  // (2!)^2 * 2
  auto full = automorphism_group(wreath_product(1, s0));
  CHECK(full.order == 24);  // the wreath of two segments is a 3-simplex
  CHECK(full.order % wg.order == 0);

  auto c5 = cycle(5);
  auto wg5 = wreath_group_generators(1, c5, automorphism_group(c5));
  CHECK(wg5.order == 320);  // 2^5 * 10
  CHECK(single_orbit(wg5));

  auto c4 = cycle(4);
  auto wg4 = wreath_group_generators(1, c4, automorphism_group(c4));
  CHECK(wg4.order == 128);  // 2^4 * 8
  CHECK(single_orbit(wg4));

  // d = 0 returns the base group unchanged
  auto wg0 = wreath_group_generators(0, c5, automorphism_group(c5));
  CHECK(wg0.order == 10);

  // d = 2 blocks carry symmetric groups of order 6
  auto wg2 = wreath_group_generators(2, s0, aut_s0);
  CHECK(wg2.order == 6 * 6 * 2);
}

TEST_CASE("wreath group divides the full automorphism group") {
  for (auto& [name, K] : std::vector<std::pair<std::string, SimplicialComplex>>{
           {"S0", testsupport::two_points()}, {"C4", cycle(4)}, {"C5", cycle(5)}}) {
    CAPTURE(name);
    auto autK = automorphism_group(K);
    auto wg = wreath_group_generators(1, K, autK);
    auto full = automorphism_group(wreath_product(1, K));
    REQUIRE(full.complete);
    CHECK(full.order % wg.order == 0);
  }
}

TEST_CASE("cycle notation") {
  std::vector<VertexLabel> dom{"a", "b", "c", "d"};
  CHECK(cycle_notation(dom, {0, 1, 2, 3}) == "()");
  CHECK(cycle_notation(dom, {1, 0, 3, 2}) == "(a b)(c d)");
  CHECK(cycle_notation(dom, {1, 2, 0, 3}) == "(a b c)");
}
