#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "wreath/complex.hpp"
#include "wreath/constructions.hpp"
#include "wreath/generators.hpp"
#include "wreath/topology.hpp"

using namespace wreath;
using testsupport::pure_corpus;

TEST_CASE("suspension of a single point is an edge") {
  auto pt = SimplicialComplex::from_facets({Simplex{"v"}});
  auto s = one_point_suspension(pt, "v");
  CHECK(s.facets() == std::vector<Simplex>{Simplex{"v'", "v''"}});
}

TEST_CASE("suspension of the pentagon") {
  auto s = one_point_suspension(cycle(5), "1");
  CHECK(s.facet_count() == 8);
  CHECK(f_vector(s).counts == std::vector<Int>{6, 12, 8});
  CHECK(euler_characteristic(s).chi == 2);
  // facet kinds: 2 * (#facets without v) + (#facets with v)
  CHECK(8 == 2 * 3 + 2);
  // every facet contains one of the two copies
  for (const auto& f : s.facets()) CHECK((f.contains("1'") || f.contains("1''")));
  CHECK_THROWS_AS(one_point_suspension(cycle(5), "7"), std::invalid_argument);
}

TEST_CASE("suspension facet-kind partition across the corpus") {
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0) continue;
    CAPTURE(name);
    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const auto& v = K.vertex(vi);
      auto s = one_point_suspension(K, v);
      auto [up, down] = suspension_copy_labels(K, v);
      std::size_t with_v = 0, without_v = 0;
      for (const auto& f : K.facets()) (f.contains(v) ? with_v : without_v)++;
      CHECK(s.facet_count() == 2 * without_v + with_v);
      for (const auto& f : s.facets()) CHECK((f.contains(up) || f.contains(down)));
    }
  }
}

TEST_CASE("link of a copy vertex recovers the base complex") {
  auto c5 = cycle(5);
  auto s = one_point_suspension(c5, "1");
  auto lk = link(s, "1'");
  // identical to C_5 after renaming 1 -> 1''
  CHECK(lk == rename_vertices(c5, {{"1", "1''"}}));
}

TEST_CASE("copy labels escape existing apostrophes") {
  auto K = SimplicialComplex::from_facets({Simplex{"v", "v'"}});
  auto [up, down] = suspension_copy_labels(K, "v");
  CHECK(up == "v''");
  CHECK(down == "v'''");
  auto s = one_point_suspension(K, "v");
  CHECK(s.vertex_count() == 3);
}

TEST_CASE("reduced join basics") {
  auto c5 = cycle(5);
  CHECK(reduced_join(0, c5, "1") == c5);
  CHECK(is_isomorphic(reduced_join(1, c5, "1"), one_point_suspension(c5, "1")));

  auto rj2 = reduced_join(2, c5, "1");
  CHECK(rj2.vertex_count() == 7);
  CHECK(rj2.has_vertex("1^1"));
  CHECK(rj2.has_vertex("1^3"));
  CHECK(euler_characteristic(rj2).chi == 0);               // 3-sphere
  CHECK(is_pseudomanifold(rj2) == Pseudomanifold::closed);
  auto h = reduced_homology(rj2);
  CHECK(h.at(3).betti == 1);
  for (int i = 0; i < 3; ++i) CHECK(h.at(i).is_zero());
}

namespace {

// direct statement of the reduced join: all copies of v over facets through
// v, all one-copy-omitted choices otherwise
SimplicialComplex oracle_reduced_join(int d, const SimplicialComplex& K,
                                      const VertexLabel& v) {
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    std::vector<VertexLabel> rest;
    for (const auto& u : f.vertices())
      if (u != v) rest.push_back(u);
    if (f.contains(v)) {
      auto s = rest;
      for (int i = 1; i <= d + 1; ++i) s.push_back(v + "^" + std::to_string(i));
      out.push_back(Simplex(s));
    } else {
      for (int omit = 1; omit <= d + 1; ++omit) {
        auto s = rest;
        for (int i = 1; i <= d + 1; ++i)
          if (i != omit) s.push_back(v + "^" + std::to_string(i));
        out.push_back(Simplex(s));
      }
    }
  }
  return SimplicialComplex::from_facets(out);
}

}  // namespace

TEST_CASE("iterated suspension equals the one-step facet description") {
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0 || K.vertex_count() > 6) continue;
    CAPTURE(name);
    for (int d = 1; d <= 2; ++d)
      for (int vi = 0; vi < K.vertex_count(); ++vi) {
        const auto& v = K.vertex(vi);
        CHECK(reduced_join(d, K, v) == oracle_reduced_join(d, K, v));
      }
  }
}

TEST_CASE("reduced joins commute") {
  CHECK(verify_reduced_join_commutes(cycle(5), "1", "2", 1, 1));
  CHECK(verify_reduced_join_commutes(path(4), "1", "4", 2, 1));
  CHECK(verify_reduced_join_commutes(path(4), "2", "3", 0, 0));
  CHECK_THROWS_AS(verify_reduced_join_commutes(cycle(5), "1", "1", 1, 1),
                  std::invalid_argument);
}

TEST_CASE("wreath product degenerate cases") {
  auto c5 = cycle(5);
  CHECK(wreath_product(0, c5) == c5);
  auto pt = SimplicialComplex::from_facets({Simplex{"v"}});
  auto w = wreath_product(3, pt);  // a single 3-simplex
  CHECK(w.facet_count() == 1);
  CHECK(w.dimension() == 3);
  CHECK_THROWS_AS(wreath_product(1, SimplicialComplex::from_facets({Simplex{}})),
                  std::invalid_argument);
}

TEST_CASE("wreath product of the pentagon, enumerated and counted") {
  auto c5 = cycle(5);
  auto w = wreath_product(1, c5);
  CHECK(w.vertex_count() == 10);
  CHECK(w.dimension() == 6);
  CHECK(wreath_facet_count(1, c5) == 40);
  CHECK(w.facet_count() == 40);
  CHECK(is_pure(w));

  // lazy enumeration agrees with materialization
  std::set<Simplex> lazy;
  Int n = 0;
  for (const Simplex& s : WreathFacets(1, c5)) {
    lazy.insert(s);
    ++n;
  }
  CHECK(n == 40);
  auto facets = w.facets();
  CHECK(lazy == std::set<Simplex>(facets.begin(), facets.end()));
}

TEST_CASE("wreath product equals successive reduced joins") {
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0) continue;
    for (int d = 1; d <= 2; ++d) {
      if (K.vertex_count() * (d + 1) > 12) continue;
      CAPTURE(name);
      CAPTURE(d);
      SimplicialComplex acc = K;
      for (const auto& v : K.vertex_labels()) acc = reduced_join(d, acc, v);
      CHECK(acc == wreath_product(d, K));  // canonical copy labels line up
      CHECK(is_isomorphic(acc, wreath_product(d, K)));
    }
  }
}

TEST_CASE("closed-form f-vector: degenerate and printed cases") {
  FVector f5{{5, 5}};
  CHECK(wreath_f_vector_formula(0, f5, 5) == f5);
  CHECK_THROWS_AS(wreath_f_vector_formula(1, f5, 4), std::invalid_argument);

  auto w = wreath_f_vector_formula(1, f5, 5);
  CHECK(w.counts ==
        std::vector<Int>{10, 45, 120, 205, 222, 140, 40});
  CHECK(w.counts[0] == 5 * 2);        // n(d+1)
  CHECK(w.counts.back() == 5 * 8);    // f_{e-1} (d+1)^{n-e}
}

TEST_CASE("closed-form f-vector matches enumeration") {
  std::vector<std::pair<std::string, SimplicialComplex>> ks = {
      {"C_5", cycle(5)},
      {"boundary_3", simplex_boundary(3)},
      {"octahedron", cross_polytope_boundary(3)},
      {"path_4", path(4)},
  };
  for (const auto& [name, K] : ks)
    for (int d = 1; d <= 2; ++d) {
      if (K.vertex_count() * (d + 1) > 18) continue;
      CAPTURE(name);
      CAPTURE(d);
      auto enumerated = f_vector(wreath_product(d, K));
      auto formula = wreath_f_vector_formula(d, f_vector(K), K.vertex_count());
      CHECK(enumerated == formula);
    }
}

TEST_CASE("wreath dimension and purity transfer") {
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0 || K.vertex_count() > 6) continue;
    CAPTURE(name);
    auto w = wreath_product(1, K);
    int n = K.vertex_count(), e = K.dimension() + 1;
    CHECK(w.dimension() == n * 1 + e - 1);
    CHECK(is_pure(w) == is_pure(K));
  }
  // an impure complex stays impure
  auto mixed = SimplicialComplex::from_facets({Simplex{"1", "2"}, Simplex{"3"}});
  CHECK_FALSE(is_pure(wreath_product(1, mixed)));
}

TEST_CASE("homology shift under one-point suspension") {
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0) continue;
    CAPTURE(name);
    auto base = reduced_homology(K);
    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      auto susp = one_point_suspension(K, K.vertex(vi));
      CHECK(homology_equals_shifted(reduced_homology(susp), base));
    }
  }
}

TEST_CASE("neighborliness transfer into wreath products") {
  std::vector<std::pair<std::string, SimplicialComplex>> ks = {
      {"C_4", cycle(4)}, {"C_5", cycle(5)}, {"boundary_2", simplex_boundary(2)},
      {"path_3", path(3)},
  };
  for (const auto& [name, K] : ks)
    for (int d = 1; d <= 2; ++d) {
      if (K.vertex_count() * (d + 1) > 12) continue;
      CAPTURE(name);
      CAPTURE(d);
      int k = neighborliness(K);
      auto w = wreath_product(d, K);
      CHECK(neighborliness(w) >= k * (d + 1) + d);
      CHECK(neighborliness(w) < (k + 1) * (d + 1));  // K is not (k+1)-neighborly
    }
  CHECK(neighborliness(wreath_product(1, cycle(5))) == 3);
}
