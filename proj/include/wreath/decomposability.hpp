#pragma once

#include <iosfwd>
#include <optional>

#include "wreath/complex.hpp"
#include "wreath/verdict.hpp"

namespace wreath {

/// A facet ordering; valid when every facet meets the union of its
/// predecessors in a pure complex of one dimension lower.
using Shelling = std::vector<Simplex>;

/// Matched cover pairs (lower, upper) on the Hasse diagram, with the empty
/// face counting as a face.  A perfect matching covers every face exactly
/// once; the vertex paired with the empty face is the critical vertex.
struct MorseMatching {
  std::vector<std::pair<Simplex, Simplex>> pairs;
};

// --- certificate verification (independent of the finders) ----------------

bool verify_shelling(const SimplicialComplex& K, const Shelling& order,
                     std::string* why = nullptr);

struct MatchingCheck {
  bool ok = false;
  std::string reason;
};
MatchingCheck verify_morse_matching(const SimplicialComplex& K, const MorseMatching& mu);

std::optional<VertexLabel> critical_vertex(const MorseMatching& mu);

// --- certificate text format -----------------------------------------------

std::string serialize_shelling(const Shelling& order);       // one facet per line
Shelling parse_shelling(std::istream& in);

std::string serialize_matching(const MorseMatching& mu);     // "<lower> -> <upper>"
MorseMatching parse_matching(std::istream& in);

// --- budgeted checkers -------------------------------------------------------

Verdict is_vertex_decomposable(const SimplicialComplex& K,
                               std::uint64_t budget = 1'000'000);

Verdict find_shelling(const SimplicialComplex& K, std::uint64_t budget = 1'000'000);

Verdict is_constructible(const SimplicialComplex& K, std::uint64_t budget = 1'000'000);

Verdict is_cone(const SimplicialComplex& K);

Verdict is_non_evasive(const SimplicialComplex& K, std::uint64_t budget = 1'000'000);

Verdict find_morse_matching(const SimplicialComplex& K, std::uint64_t budget = 1'000'000);

// --- lifts through a one-point suspension -------------------------------------

/// Shelling of the suspension at v: facets avoiding v become the consecutive
/// pair v'*F, v''*F; facets through v become v'v''*(F - v).  Input and
/// output are both run through the verifier.
Shelling lift_shelling(const SimplicialComplex& K, const Shelling& order,
                       const VertexLabel& v);

/// Image of a suspension shelling under the facet projection (doubles
/// removed, first occurrence kept).
Shelling project_shelling(const Shelling& suspended, const VertexLabel& v,
                          const VertexLabel& upper, const VertexLabel& lower);

/// Lifts a perfect Morse matching to the suspension at v.  A pair maps to
/// one, two, or three pairs depending on how it meets the star of v.  The
/// result is verified before it is returned.
MorseMatching lift_morse_matching(const SimplicialComplex& K, const MorseMatching& mu,
                                  const VertexLabel& v);

}  // namespace wreath
