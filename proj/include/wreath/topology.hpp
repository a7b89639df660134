#pragma once

#include <optional>

#include "wreath/complex.hpp"
#include "wreath/verdict.hpp"

namespace wreath {

// --- integer homology via Smith normal form ---------------------------------

/// Sparse boundary matrix from dim-faces to (dim-1)-faces.  Faces are sorted
/// canonically per dimension; signs follow the ascending-vertex orientation,
/// the j-th omitted vertex contributing (-1)^j.  dim = 0 is the augmentation
/// row onto the empty face.
struct BoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;  // (row, sign)
};

/// Boundary matrices for dimensions 0..dim(K).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K);

struct SmithNormalForm {
  std::vector<Int> diagonal;  // nonzero invariant factors, each dividing the next
  std::size_t rank() const { return diagonal.size(); }
};

SmithNormalForm smith_normal_form(std::vector<std::vector<Int>> m);

struct HomologyGroup {
  long betti = 0;
  std::vector<Int> torsion;  // coefficients > 1, each dividing the next

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
  std::string to_string() const;  // "0", "Z^b", "Z^b + Z/t + ..."
};

/// Reduced homology groups indexed by dimension 0..dim(K).
struct HomologyGroups {
  std::vector<HomologyGroup> groups;

  int top_dim() const { return static_cast<int>(groups.size()) - 1; }
  HomologyGroup at(int i) const {
    if (i < 0 || i > top_dim()) return {};
    return groups[i];
  }
  bool operator==(const HomologyGroups&) const = default;
  std::string to_string() const;  // one "H~_i = ..." line per dimension
};

/// Needs at least one vertex.  Includes the augmentation map, so the groups
/// are reduced.
HomologyGroups reduced_homology(const SimplicialComplex& K);

bool is_z_acyclic(const SimplicialComplex& K);

/// H~_i(suspended) == H~_{i-1}(base) for all i, with H~_0(suspended) == 0.
bool homology_equals_shifted(const HomologyGroups& suspended, const HomologyGroups& base);

// --- pseudomanifold / neighborliness ----------------------------------------

enum class Pseudomanifold { closed, with_boundary, neither };

const char* to_string(Pseudomanifold p);

/// Counts facet incidences per ridge; requires a pure complex.
Pseudomanifold is_pseudomanifold(const SimplicialComplex& K);

/// Largest k such that every k vertices span a face.
int neighborliness(const SimplicialComplex& K);

/// Parameter conditions under which the wreath product of a d-simplex
/// boundary with a neighborly (e-1)-sphere on n vertices stays neighborly:
/// e-1 odd, e+2 <= n <= e+3, and d = 1 when n = e+3.  Requires d >= 1 and
/// n >= e+2.
bool neighborly_wreath_parameter_check(int e, int n, int d);

/// Rational Cohen-Macaulayness: for every face G (including the empty one),
/// the rational reduced homology of link(G) vanishes below its dimension.
/// Face enumeration is capped; past the cap the verdict is unknown.
Verdict is_cohen_macaulay_Q(const SimplicialComplex& K,
                            std::size_t max_faces = std::size_t{1} << 20);

// --- dual graph diagnostics --------------------------------------------------

/// Nodes are facets (canonical order); edges join facets sharing a ridge.
struct DualGraph {
  std::vector<Simplex> facets;
  std::vector<std::vector<int>> adj;
};

DualGraph dual_graph(const SimplicialComplex& K);  // requires pure

/// BFS all-pairs diameter; nullopt when the dual graph is disconnected.
std::optional<int> dual_diameter(const SimplicialComplex& K);

/// (f_0 - e) - diameter, where e = dim + 1.  Negative gap = Hirsch violation.
std::optional<int> hirsch_gap(const SimplicialComplex& K);

struct FacetPath {
  int distance = -1;
  std::vector<Simplex> path;
};

/// Shortest dual-graph path between two facets; nullopt when unreachable.
std::optional<FacetPath> facet_distance(const SimplicialComplex& K, const Simplex& from,
                                        const Simplex& to);

enum class PathReport { non_revisiting_found, all_revisit, unknown };

const char* to_string(PathReport r);

/// A path revisits when some vertex leaves the running facet and re-enters
/// later.  Enumerates simple dual paths up to max_length (default: diameter
/// + 4) against a node budget.
struct RevisitingPathReport {
  PathReport status = PathReport::unknown;
  std::vector<Simplex> witness;  // a non-revisiting path, when found
  std::uint64_t paths_examined = 0;
  int max_length = 0;
};

RevisitingPathReport revisiting_path_report(const SimplicialComplex& K,
                                            const Simplex& from, const Simplex& to,
                                            int max_length = -1,
                                            std::uint64_t budget = 1'000'000);

}  // namespace wreath
