#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "corpus.hpp"
#include "wreath/complex.hpp"
#include "wreath/generators.hpp"
#include "wreath/io.hpp"

using namespace wreath;
using testsupport::oracle_f_vector;
using testsupport::pure_corpus;

TEST_CASE("simplex basics") {
  Simplex s{"b", "a", "c"};
  CHECK(s.vertices() == std::vector<VertexLabel>{"a", "b", "c"});
  CHECK(s.dim() == 2);
  CHECK(s.contains("b"));
  CHECK_FALSE(s.contains("d"));
  CHECK(s.without("b").vertices() == std::vector<VertexLabel>{"a", "c"});
  CHECK(s.with("d").card() == 4);
  CHECK(Simplex{}.to_string() == "EMPTYFACET");
  CHECK_THROWS_AS(Simplex({"a", "a"}), std::invalid_argument);
}

TEST_CASE("labels are validated") {
  CHECK(valid_vertex_label("v'"));
  CHECK(valid_vertex_label("1^2"));
  CHECK_FALSE(valid_vertex_label(""));
  CHECK_FALSE(valid_vertex_label("a b"));
  CHECK_FALSE(valid_vertex_label("#x"));
  CHECK_THROWS_AS(SimplicialComplex::from_facets({Simplex{"a b"}}), std::invalid_argument);
}

TEST_CASE("construction prunes dominated facets") {
  std::size_t pruned = 0;
  auto K = SimplicialComplex::from_facets(
      {Simplex{"1", "2", "3"}, Simplex{"1", "2"}, Simplex{"1", "2", "3"}}, &pruned);
  CHECK(K.facet_count() == 1);
  CHECK(pruned == 2);
  CHECK(K.contains(Simplex{"1", "2"}));
  CHECK_FALSE(K.contains(Simplex{"1", "4"}));
}

TEST_CASE("void complex vs the complex with one empty facet") {
  SimplicialComplex void_complex;
  auto empty_facet = SimplicialComplex::from_facets({Simplex{}});
  CHECK(void_complex.is_void());
  CHECK_FALSE(empty_facet.is_void());
  CHECK(empty_facet.dimension() == -1);
  CHECK(void_complex != empty_facet);
  CHECK(f_vector(empty_facet).counts.empty());
}

TEST_CASE("link, star, deletion on the pentagon") {
  auto c5 = cycle(5);
  auto lk = link(c5, "1");
  CHECK(lk.facets() == std::vector<Simplex>{Simplex{"2"}, Simplex{"5"}});
  auto st = star(c5, "1");
  CHECK(st.facets() == std::vector<Simplex>{Simplex{"1", "2"}, Simplex{"1", "5"}});
  auto del = deletion(c5, "1");
  CHECK(del.facets() ==
        std::vector<Simplex>{Simplex{"2", "3"}, Simplex{"3", "4"}, Simplex{"4", "5"}});
  CHECK_THROWS_AS(link(c5, "9"), std::invalid_argument);
}

TEST_CASE("link of a vertex of a simplex boundary") {
  auto b3 = simplex_boundary(3);
  auto lk = link(b3, "1");  // boundary of the triangle {2,3,4}
  CHECK(is_isomorphic(lk, simplex_boundary(2)));
  CHECK(f_vector(lk).counts == std::vector<Int>{3, 3});
}

TEST_CASE("star is a cone with apex v and star/deletion recover the facets") {
  for (const auto& [name, K] : pure_corpus()) {
    CAPTURE(name);
    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const auto& v = K.vertex(vi);
      auto st = star(K, v);
      for (const auto& f : st.facets()) CHECK(f.contains(v));
      // star = cone over the link
      auto lk = link(K, v);
      std::vector<Simplex> coned;
      if (lk.is_void())
        coned.push_back(Simplex{v});
      else
        for (const auto& f : lk.facets()) coned.push_back(f.with(v));
      CHECK(st == SimplicialComplex::from_facets(coned));
      // facets(K) = maximal(facets(star) + facets(deletion))
      auto del = deletion(K, v);
      std::vector<Simplex> both = st.facets();
      for (const auto& f : del.facets()) both.push_back(f);
      CHECK(SimplicialComplex::from_facets(both) == K);
    }
  }
}

TEST_CASE("f-vector examples and oracle") {
  CHECK(f_vector(cycle(5)).counts == std::vector<Int>{5, 5});
  CHECK(f_vector(simplex_boundary(3)).counts == std::vector<Int>{4, 6, 4});
  for (const auto& [name, K] : pure_corpus()) {
    CAPTURE(name);
    CHECK(f_vector(K).counts == oracle_f_vector(K));
  }
}

TEST_CASE("membership agrees with the face oracle") {
  for (const auto& [name, K] : pure_corpus()) {
    CAPTURE(name);
    auto faces = testsupport::oracle_faces(K);
    for (const auto& face : faces)
      CHECK(K.contains(Simplex(std::vector<VertexLabel>(face.begin(), face.end()))));
    CHECK(K.contains(Simplex{}));  // empty face always present
  }
  CHECK_FALSE(cycle(5).contains(Simplex{"1", "3"}));
}

TEST_CASE("purity, dimension, euler characteristic") {
  auto c5 = cycle(5);
  CHECK(is_pure(c5));
  CHECK(dimension(c5) == 1);
  auto chi = euler_characteristic(c5);
  CHECK(chi.chi == 0);
  CHECK(chi.chi_reduced == -1);
  auto mixed = SimplicialComplex::from_facets({Simplex{"1", "2"}, Simplex{"3"}});
  CHECK_FALSE(is_pure(mixed));
}

TEST_CASE("join examples") {
  auto s0 = testsupport::two_points();
  auto four_cycle = join(s0, s0);  // auto-renames colliding labels
  CHECK(four_cycle.vertex_count() == 4);
  CHECK(is_isomorphic(four_cycle, cycle(4)));

  auto point = SimplicialComplex::from_facets({Simplex{"p"}});
  auto cone5 = join(point, cycle(5));
  for (const auto& f : cone5.facets()) CHECK(f.contains("p"));
  CHECK(f_vector(cone5).counts == std::vector<Int>{6, 10, 5});
}

TEST_CASE("join f-vector identity on corpus pairs") {
  auto fvv = [](const SimplicialComplex& K) { return f_vector(K).counts; };
  auto corpus = pure_corpus();
  for (const auto& [n1, K] : corpus) {
    for (const auto& [n2, L] : corpus) {
      if (K.vertex_count() > 6 || L.vertex_count() > 6) continue;
      CAPTURE(n1);
      CAPTURE(n2);
      auto J = join(K, L);
      auto fK = fvv(K), fL = fvv(L), fJ = fvv(J);
      auto get = [](const std::vector<Int>& v, long i) -> Int {
        if (i == -1) return 1;
        if (i < 0 || i >= static_cast<long>(v.size())) return 0;
        return v[i];
      };
      for (long i = 0; i < static_cast<long>(fJ.size()); ++i) {
        Int expect = 0;
        for (long a = -1; a <= i; ++a) expect += get(fK, a) * get(fL, i - 1 - a);
        CHECK(fJ[i] == expect);
      }
    }
  }
}

TEST_CASE("isomorphism: relabelings, witnesses, equivalence") {
  auto c5 = cycle(5);
  std::map<VertexLabel, VertexLabel> weird{
      {"1", "x"}, {"2", "yy"}, {"3", "z"}, {"4", "w"}, {"5", "v"}};
  auto c5b = rename_vertices(c5, weird);
  auto witness = find_isomorphism(c5, c5b);
  REQUIRE(witness.has_value());
  // the witness must map facets onto facets
  for (const auto& f : c5.facets()) {
    std::vector<VertexLabel> image;
    for (const auto& v : f.vertices()) image.push_back(witness->at(v));
    CHECK(c5b.contains(Simplex(image)));
  }
  CHECK_FALSE(is_isomorphic(cycle(5), cycle(6)));
  CHECK(is_isomorphic(cycle(4), cross_polytope_boundary(2)));
}

TEST_CASE("isomorphism is an equivalence on a sample of relabelings") {
  std::mt19937 rng(12345);
  for (const auto& [name, K] : pure_corpus()) {
    if (K.vertex_count() == 0) continue;
    CAPTURE(name);
    auto shuffled_labels = [&] {
      std::vector<std::string> pool;
      for (int i = 0; i < K.vertex_count(); ++i) pool.push_back("r" + std::to_string(i));
      std::shuffle(pool.begin(), pool.end(), rng);
      std::map<VertexLabel, VertexLabel> m;
      for (int i = 0; i < K.vertex_count(); ++i) m[K.vertex(i)] = pool[i];
      return m;
    };
    auto A = rename_vertices(K, shuffled_labels());
    auto B = rename_vertices(K, shuffled_labels());
    CHECK(is_isomorphic(K, K));      // reflexive
    CHECK(is_isomorphic(K, A));
    CHECK(is_isomorphic(A, K));      // symmetric
    CHECK(is_isomorphic(A, B));      // transitive through K
  }
}

TEST_CASE("memo keys are relabeling-invariant on small complexes") {
  auto c5 = cycle(5);
  std::map<VertexLabel, VertexLabel> m{{"1", "a"}, {"2", "b"}, {"3", "c"}, {"4", "d"}, {"5", "e"}};
  CHECK(memo_key(c5) == memo_key(rename_vertices(c5, m)));
  CHECK(memo_key(cycle(5)) != memo_key(cycle(6)));
  CHECK(memo_key(path(4)) != memo_key(cycle(4)));
}

TEST_CASE("facet file round trip") {
  for (const auto& [name, K] : pure_corpus()) {
    CAPTURE(name);
    std::ostringstream out;
    write_complex(out, K);
    std::istringstream in(out.str());
    CHECK(read_complex(in) == K);
  }
}

TEST_CASE("facet file parsing") {
  std::istringstream in("# a comment\n1 2 3\n\n  4 5\n");
  auto K = read_complex(in);
  CHECK(K.facet_count() == 2);
  CHECK(K.contains(Simplex{"4", "5"}));

  std::istringstream empty_facet("EMPTYFACET\n");
  auto E = read_complex(empty_facet);
  CHECK(E.dimension() == -1);

  std::istringstream bad("1 2\n1\n");
  CHECK_THROWS_WITH_AS(read_complex(bad), doctest::Contains("contained in another"),
                       std::runtime_error);
  std::istringstream bad2("1 2\n1\n");
  std::string warnings;
  auto pruned = read_complex(bad2, /*prune=*/true, &warnings);
  CHECK(pruned.facet_count() == 1);
  CHECK(warnings.find("pruned") != std::string::npos);
}
