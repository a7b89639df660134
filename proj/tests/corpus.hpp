#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wreath/complex.hpp"
#include "wreath/generators.hpp"
#include "wreath/ints.hpp"

namespace testsupport {

using wreath::SimplicialComplex;
using wreath::Simplex;

inline SimplicialComplex two_disjoint_edges() {
  return SimplicialComplex::from_facets({Simplex{"1", "2"}, Simplex{"3", "4"}});
}

inline SimplicialComplex two_points() {
  return SimplicialComplex::from_facets({Simplex{"1"}, Simplex{"2"}});
}

/// Small pure complexes on <= 8 vertices used across the property tests.
inline std::vector<std::pair<std::string, SimplicialComplex>> pure_corpus() {
  using wreath::cycle;
  using wreath::path;
  using wreath::simplex;
  using wreath::simplex_boundary;
  using wreath::cross_polytope_boundary;
  return {
      {"C_3", cycle(3)},
      {"C_4", cycle(4)},
      {"C_5", cycle(5)},
      {"C_6", cycle(6)},
      {"path_3", path(3)},
      {"path_4", path(4)},
      {"path_5", path(5)},
      {"simplex_1", simplex(1)},
      {"simplex_2", simplex(2)},
      {"simplex_3", simplex(3)},
      {"boundary_2", simplex_boundary(2)},
      {"boundary_3", simplex_boundary(3)},
      {"octahedron", cross_polytope_boundary(3)},
      {"square", cross_polytope_boundary(2)},
      {"two_points", two_points()},
      {"two_edges", two_disjoint_edges()},
  };
}

/// Independent face enumeration: downward closure over label sets.
inline std::set<std::set<std::string>> oracle_faces(const SimplicialComplex& K) {
  std::set<std::set<std::string>> faces;
  for (const auto& f : K.facets()) {
    std::set<std::string> base(f.vertices().begin(), f.vertices().end());
    // enumerate all subsets of base
    std::vector<std::string> elems(base.begin(), base.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
      std::set<std::string> sub;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if ((mask >> i) & 1) sub.insert(elems[i]);
      if (!sub.empty()) faces.insert(std::move(sub));
    }
  }
  return faces;
}

inline std::vector<wreath::Int> oracle_f_vector(const SimplicialComplex& K) {
  std::vector<wreath::Int> counts;
  for (const auto& face : oracle_faces(K)) {
    if (face.size() > counts.size()) counts.resize(face.size(), 0);
    counts[face.size() - 1] += 1;
  }
  return counts;
}

}  // namespace testsupport
