#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "wreath/constructions.hpp"
#include "wreath/generators.hpp"
#include "wreath/polytope.hpp"

using namespace wreath;

TEST_CASE("stock polytopes carry valid facet systems") {
  for (int d = 1; d <= 4; ++d) CHECK(verify_own_facets(simplex_polytope(d)).holds());
  for (int d = 1; d <= 3; ++d) CHECK(verify_own_facets(hypercube(d)).holds());
  for (int d = 1; d <= 3; ++d) CHECK(verify_own_facets(cross_polytope_geom(d)).holds());
  CHECK(verify_own_facets(pentagon()).holds());
  CHECK_THROWS_AS(convex_polygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("barycenter translation") {
  GeometricPolytope seg;
  seg.ambient = 1;
  seg.vertices = {{Rat(0)}, {Rat(2)}};
  seg.names = {"a", "b"};
  auto t = translate_to_vertex_barycenter(seg);
  CHECK(t.vertices[0][0] == -1);
  CHECK(t.vertices[1][0] == 1);
  // already centered: identity on coordinates
  auto t2 = translate_to_vertex_barycenter(t);
  CHECK(t2.vertices == t.vertices);
  Rat sum = 0;
  for (const auto& v : t.vertices) sum += v[0];
  CHECK(sum == 0);
}

TEST_CASE("dual wedge of a segment is a triangle") {
  auto seg = simplex_polytope(1);
  auto tri = dual_wedge(seg, "1");
  CHECK(tri.ambient == 2);
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.names == std::vector<VertexLabel>{"2", "1'", "1''"});
  CHECK(verify_own_facets(tri).holds());
  CHECK_THROWS_AS(dual_wedge(seg, "zz"), std::invalid_argument);
}

TEST_CASE("dual wedge of a simplex is a simplex") {
  for (int d = 1; d <= 3; ++d) {
    CAPTURE(d);
    auto w = dual_wedge(simplex_polytope(d), "1");
    CHECK(static_cast<int>(w.vertices.size()) == d + 2);
    CHECK(is_isomorphic(boundary_complex(w), simplex_boundary(d + 1)));
  }
}

TEST_CASE("iterated dual wedges at either copy are combinatorially equal") {
  auto p = pentagon();
  auto w = dual_wedge(p, "1");
  auto at_upper = dual_wedge(w, "1'");
  auto at_lower = dual_wedge(w, "1''");
  CHECK(is_isomorphic(boundary_complex(at_upper), boundary_complex(at_lower)));
}

TEST_CASE("dual wedge boundary is the one-point suspension of the base boundary") {
  for (auto* P : {&simplex_polytope(2), &pentagon()}) {
    (void)P;
  }
  for (const GeometricPolytope& P : {simplex_polytope(2), pentagon(), cross_polytope_geom(2)}) {
    auto base = boundary_complex(P);
    for (const auto& v : P.names) {
      auto geo = boundary_complex(dual_wedge(P, v));
      auto comb = one_point_suspension(base, v);
      CHECK(geo == comb);  // same labels by construction
    }
  }
}

TEST_CASE("wreath product of two segments is the paper tetrahedron") {
  auto seg = simplex_polytope(1);
  bool moved = true;
  auto w = polytope_wreath(seg, seg, &moved);
  CHECK_FALSE(moved);
  CHECK(w.ambient == 3);
  REQUIRE(w.vertices.size() == 4);
  std::set<RationalVector> got(w.vertices.begin(), w.vertices.end());
  std::set<RationalVector> want = {{Rat(-1), Rat(0), Rat(-1)},
                                   {Rat(1), Rat(0), Rat(-1)},
                                   {Rat(0), Rat(-1), Rat(1)},
                                   {Rat(0), Rat(1), Rat(1)}};
  CHECK(got == want);

  auto predicted = predicted_facets(seg, seg);
  CHECK(predicted.size() == 4);
  CHECK(verify_facet_system(w, predicted).holds());
  for (const auto& f : predicted) CHECK(f.vertices.size() == 3);
}

TEST_CASE("wreath with a point factor embeds the other factor") {
  auto pt = simplex_polytope(0);
  auto pent = pentagon();
  auto w = polytope_wreath(pt, pent);
  CHECK(w.ambient == 2);  // n*0 + 2
  CHECK(w.vertices.size() == 5);
  std::set<RationalVector> got(w.vertices.begin(), w.vertices.end());
  std::set<RationalVector> want(pent.vertices.begin(), pent.vertices.end());
  CHECK(got == want);
}

TEST_CASE("vertex count of a wreath product is always mn") {
  auto tri = simplex_polytope(2);
  auto sq = hypercube(2);
  CHECK(polytope_wreath(tri, sq).vertices.size() == 3 * 4);
  CHECK(polytope_wreath(sq, tri).vertices.size() == 4 * 3);
}

TEST_CASE("auto-translation fires with a notice flag") {
  GeometricPolytope off;
  off.ambient = 1;
  off.vertices = {{Rat(0)}, {Rat(2)}};
  off.names = {"a", "b"};
  bool moved = false;
  auto w = polytope_wreath(off, simplex_polytope(1), &moved);
  CHECK(moved);
  CHECK(w.vertices.size() == 4);
}

TEST_CASE("predicted facets of segment wr pentagon") {
  auto seg = simplex_polytope(1);
  auto pent = pentagon();
  auto predicted = predicted_facets(seg, pent);
  CHECK(predicted.size() == 5 * 8);  // f_1(Q) * (f_0(P))^(n-c) = 5 * 2^3

  auto w = polytope_wreath(seg, pent);
  CHECK(w.ambient == 7);
  CHECK(verify_facet_system(w, predicted).holds());
  for (const auto& f : predicted) CHECK(f.vertices.size() == 7);  // simplicial

  // tampering with one normal entry must be caught with a witness
  auto broken = predicted;
  broken[7].normal[3] += 1;
  auto v = verify_facet_system(w, broken);
  CHECK(v.fails());
  CHECK(v.certificate.find("vertex") != std::string::npos);

  // blocking map: every facet of Q is hit by exactly (f^P)^(n-|G|) facets
  std::map<std::vector<VertexLabel>, int> fibre;
  for (const auto& f : predicted) fibre[blocking_beta(f, pent)]++;
  CHECK(fibre.size() == 5);
  for (const auto& [g, cnt] : fibre) CHECK(cnt == 8);
}

TEST_CASE("non-simplex first factor gives non-simplicial wreath facets") {
  auto sq = hypercube(2);
  auto seg = simplex_polytope(1);
  auto predicted = predicted_facets(sq, seg);
  auto w = polytope_wreath(sq, seg);
  CHECK(verify_facet_system(w, predicted).holds());
  bool any_simplex_facet = true;
  for (const auto& f : predicted)
    if (static_cast<int>(f.vertices.size()) != w.ambient) any_simplex_facet = false;
  CHECK_FALSE(any_simplex_facet);
}

TEST_CASE("projection map is block-injective and name-consistent") {
  auto seg = simplex_polytope(1);
  auto pent = pentagon();
  auto pi = projection_pi(seg, pent);
  CHECK(pi.size() == 10);
  std::set<std::pair<VertexLabel, VertexLabel>> images;
  for (const auto& e : pi) {
    CHECK(e.wreath == e.p + "^" + e.q);  // pentagon names are 1..5
    images.insert({e.p, e.q});
  }
  CHECK(images.size() == 10);
}

TEST_CASE("wreath equals iterated dual wedge") {
  CHECK(wreath_equals_iterated_dual_wedge(1, simplex_polytope(2)).holds());
  CHECK(wreath_equals_iterated_dual_wedge(1, cross_polytope_geom(2)).holds());
  CHECK(wreath_equals_iterated_dual_wedge(2, simplex_polytope(1)).holds());
}

TEST_CASE("polytope file round trip") {
  for (const GeometricPolytope& P : {simplex_polytope(2), pentagon(), hypercube(2)}) {
    std::ostringstream out;
    write_polytope(out, P);
    std::istringstream in(out.str());
    auto back = read_polytope(in);
    CHECK(back.ambient == P.ambient);
    CHECK(back.vertices == P.vertices);
    CHECK(back.names == P.names);
    REQUIRE(back.facets.size() == P.facets.size());
    for (std::size_t i = 0; i < P.facets.size(); ++i) {
      CHECK(back.facets[i].vertices == P.facets[i].vertices);
      CHECK(back.facets[i].normal == P.facets[i].normal);
    }
  }
}

TEST_CASE("polytope file parsing errors") {
  std::istringstream missing_header("a: 1 2\n");
  CHECK_THROWS_AS(read_polytope(missing_header), std::runtime_error);
  std::istringstream bad_dim("POLYTOPE 2 1\na: 1\n");
  CHECK_THROWS_AS(read_polytope(bad_dim), std::runtime_error);
  std::istringstream bad_rat("POLYTOPE 1 1\na: x\n");
  CHECK_THROWS_AS(read_polytope(bad_rat), std::runtime_error);
  std::istringstream ok("POLYTOPE 1 2\na: -1\nb: 1\nFACET a | normal: 1\nFACET b | normal: -1\n");
  auto P = read_polytope(ok);
  CHECK(P.facets.size() == 2);
  CHECK(verify_own_facets(P).holds());
  CHECK(P.vertices[0][0] == -1);
}

TEST_CASE("rational parsing accepts p/q") {
  std::istringstream in("POLYTOPE 1 2\na: -2/3\nb: 2/3\n");
  auto P = read_polytope(in);
  CHECK(P.vertices[0][0] == Rat(-2, 3));
}
