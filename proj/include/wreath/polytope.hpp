#pragma once

#include <iosfwd>
#include <optional>

#include "wreath/complex.hpp"
#include "wreath/ints.hpp"
#include "wreath/verdict.hpp"

namespace wreath {

/// Exact rational coordinate vector.
using RationalVector = std::vector<Rat>;

Rat dot(const RationalVector& a, const RationalVector& b);

/// A facet given by its vertex indices plus the normalized facet normal g,
/// so the facet inequality reads 1 + <x, g> >= 0 with equality exactly on
/// the facet (valid whenever the origin is interior).
struct PolytopeFacet {
  std::vector<int> vertices;  // ascending indices into the owner's list
  RationalVector normal;
};

/// Convex polytope with exact rational vertex coordinates and an optional
/// facet system.
struct GeometricPolytope {
  int ambient = 0;
  std::vector<RationalVector> vertices;
  std::vector<VertexLabel> names;
  std::vector<PolytopeFacet> facets;  // empty = no facet system attached

  bool has_facets() const { return !facets.empty(); }
  std::optional<int> vertex_index(const VertexLabel& name) const;
  RationalVector vertex_barycenter() const;
};

/// One predicted facet of a wreath product: the base facet of Q together
/// with one chosen facet of P per Q-vertex outside it, its vertex-name set,
/// and the normal assembled from the factors' normals.
struct PredictedFacet {
  std::vector<VertexLabel> vertices;  // sorted
  RationalVector normal;
  int q_facet = -1;            // index of the base facet G in Q's facet list
  std::vector<int> p_choice;   // per Q-vertex outside G (ascending), index into P's facets
};

// --- constructions -----------------------------------------------------------

GeometricPolytope translate_to_vertex_barycenter(const GeometricPolytope& P);

/// Dual wedge at a vertex: every other vertex gains a zero coordinate, v
/// splits into v+1 and v-1 (named v' and v'').  An attached facet system is
/// carried along: facets avoiding v cone to both copies, facets through v
/// are wedged in place.
GeometricPolytope dual_wedge(const GeometricPolytope& P, const VertexLabel& v);

/// Wreath product coordinates: vertex (v_i)^k + w_k places v_i in block k of
/// an n-block layout and appends w_k; named "v_i^k".  Inputs are translated
/// to their vertex barycenters when necessary (*translated reports it).
GeometricPolytope polytope_wreath(const GeometricPolytope& P, const GeometricPolytope& Q,
                                  bool* translated = nullptr);

/// All predicted facets (G; F_{g+1},...,F_n) of the wreath product, with
/// normals (sum over k outside G of (1+<w_k,g>) (phi_k)^k) + g.  Both input
/// facet systems are validated by sign conditions first.
std::vector<PredictedFacet> predicted_facets(const GeometricPolytope& P,
                                             const GeometricPolytope& Q);

/// Checks 1 + <x, normal> = 0 exactly on each predicted vertex set and > 0
/// elsewhere; when every predicted facet has exactly dim vertices, also
/// counts ridge incidences (each must lie in exactly two facets).
Verdict verify_facet_system(const GeometricPolytope& W,
                            const std::vector<PredictedFacet>& predicted);

/// Validates a polytope's own attached facet system the same way.
Verdict verify_own_facets(const GeometricPolytope& P);

/// Name-level projection P wr Q -> P x Q.
struct ProjectionEntry {
  VertexLabel wreath, p, q;
};
std::vector<ProjectionEntry> projection_pi(const GeometricPolytope& P,
                                           const GeometricPolytope& Q);

/// The base facet of Q behind a predicted wreath facet.
std::vector<VertexLabel> blocking_beta(const PredictedFacet& f, const GeometricPolytope& Q);

/// Boundary complex read off a facet system (vertex-name sets as facets).
SimplicialComplex boundary_complex(const GeometricPolytope& P);
SimplicialComplex boundary_complex(const GeometricPolytope& W,
                                   const std::vector<PredictedFacet>& predicted);

/// Compares the predicted boundary of simplex wr Q against the d-fold
/// iterated dual wedge over all vertices of Q, as simplicial complexes.
Verdict wreath_equals_iterated_dual_wedge(int d, const GeometricPolytope& Q);

// --- stock polytopes with facet systems ------------------------------------------

/// Simplex with vertices e_1..e_d and -(e_1+...+e_d); vertex barycenter 0.
GeometricPolytope simplex_polytope(int d);

/// [-1,1]^d.
GeometricPolytope hypercube(int d);

/// conv{+-e_i}.
GeometricPolytope cross_polytope_geom(int d);

/// Convex polygon from vertices in counterclockwise order (exact rational
/// coordinates); translated to its vertex barycenter, edge normals solved
/// exactly.  Throws when the points are not in convex position.
GeometricPolytope convex_polygon(const std::vector<std::pair<Rat, Rat>>& points);

/// A fixed rational convex pentagon with vertex barycenter 0.
GeometricPolytope pentagon();

// --- file format -------------------------------------------------------------------

/// "POLYTOPE <ambient> <n>" header, one "name: r_1 ... r_dim" line per
/// vertex, then optional "FACET name1 ... | normal: r_1 ... r_dim" lines.
GeometricPolytope read_polytope(std::istream& in);
GeometricPolytope read_polytope_file(const std::string& path);
void write_polytope(std::ostream& out, const GeometricPolytope& P);
void write_polytope_file(const std::string& path, const GeometricPolytope& P);

}  // namespace wreath
