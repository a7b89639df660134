#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreath/bits.hpp"
#include "wreath/ints.hpp"

namespace wreath {

/// Vertex labels are opaque strings: non-empty, no whitespace, no '#'.
/// They compare lexicographically, which fixes every canonical order below.
using VertexLabel = std::string;

bool valid_vertex_label(const VertexLabel& name);

/// A face given by its strictly sorted set of vertex labels.  The empty
/// simplex represents the face {} (dimension -1).
class Simplex {
  std::vector<VertexLabel> verts_;

 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexLabel> verts);  // sorts, rejects duplicates
  Simplex(std::initializer_list<VertexLabel> verts);

  const std::vector<VertexLabel>& vertices() const { return verts_; }
  int card() const { return static_cast<int>(verts_.size()); }
  int dim() const { return card() - 1; }
  bool contains(const VertexLabel& v) const;
  bool is_subset_of(const Simplex& o) const;

  Simplex with(const VertexLabel& v) const;
  Simplex without(const VertexLabel& v) const;

  bool operator==(const Simplex&) const = default;
  bool operator<(const Simplex& o) const;  // lexicographic on label sequences

  std::string to_string() const;  // labels joined by spaces; "EMPTYFACET" for {}
};

/// Face-count sequence (f_0, ..., f_dim) with exact integer entries.
/// The complex {()} gets the empty sequence (f_{-1} = 1 stays implicit).
struct FVector {
  std::vector<Int> counts;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector&) const = default;
  std::string to_string() const;
};

/// Finite abstract simplicial complex stored by its inclusion-maximal faces.
/// The void complex (no faces) and the complex {()} (one empty facet) are
/// both representable and distinct.  Instances are immutable after
/// construction; all operations below are pure functions.
class SimplicialComplex {
  std::vector<VertexLabel> verts_;  // sorted, unique; position = vertex index
  std::vector<FaceBits> facets_;    // inclusion-maximal, canonically ordered

  SimplicialComplex(std::vector<VertexLabel> verts, std::vector<FaceBits> facets);

 public:
  SimplicialComplex() = default;  // the void complex

  /// Builds a complex from candidate facets, pruning duplicates and faces
  /// contained in another candidate.  Label syntax is validated.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  /// Same, but reports how many candidates were pruned away.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets,
                                       std::size_t* pruned);

  bool is_void() const { return facets_.empty(); }
  int dimension() const;  // -1 for {()}; error on the void complex

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<VertexLabel>& vertex_labels() const { return verts_; }
  const VertexLabel& vertex(int i) const { return verts_[i]; }
  std::optional<int> vertex_index(const VertexLabel& v) const;
  bool has_vertex(const VertexLabel& v) const { return vertex_index(v).has_value(); }

  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<FaceBits>& facet_bits() const { return facets_; }
  Simplex facet(std::size_t i) const;
  std::vector<Simplex> facets() const;

  Simplex to_simplex(const FaceBits& b) const;
  std::optional<FaceBits> to_bits(const Simplex& s) const;  // nullopt: unknown label

  /// Membership is decided by subset tests against the facet list.
  bool contains(const Simplex& s) const;
  bool contains(const FaceBits& b) const;

  /// Every k-subset of the vertex set is a face.  (Equivalent to
  /// f_{k-1} = C(f_0, k), since a complex is downward closed.)
  bool is_k_neighborly(int k) const;

  /// All distinct faces, excluding the empty face, ordered by (dim, lex).
  /// Stops and returns nullopt once more than `cap` faces exist.
  std::optional<std::vector<FaceBits>> all_faces(std::size_t cap = SIZE_MAX) const;

  bool operator==(const SimplicialComplex&) const = default;
};

// --- subcomplex operators -------------------------------------------------

SimplicialComplex link(const SimplicialComplex& K, const VertexLabel& v);
SimplicialComplex star(const SimplicialComplex& K, const VertexLabel& v);
SimplicialComplex deletion(const SimplicialComplex& K, const VertexLabel& v);

/// Link of an arbitrary face (link of {} is K itself).
SimplicialComplex link_of_face(const SimplicialComplex& K, const Simplex& g);

// --- global invariants ----------------------------------------------------

FVector f_vector(const SimplicialComplex& K);
bool is_pure(const SimplicialComplex& K);
int dimension(const SimplicialComplex& K);

struct EulerCharacteristic {
  Int chi;          // sum (-1)^i f_i
  Int chi_reduced;  // chi - 1
};
EulerCharacteristic euler_characteristic(const SimplicialComplex& K);

/// Join product.  When the vertex sets intersect, both sides are renamed
/// with the prefixes "L." and "R." before joining.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

SimplicialComplex rename_vertices(const SimplicialComplex& K,
                                  const std::map<VertexLabel, VertexLabel>& renaming);

// --- isomorphism ----------------------------------------------------------

/// A facet-preserving vertex bijection K -> L, if one exists.
std::optional<std::map<VertexLabel, VertexLabel>> find_isomorphism(
    const SimplicialComplex& K, const SimplicialComplex& L);

bool is_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L);

/// Enumerates automorphisms of K (as index permutations over the sorted
/// vertex list) until the callback returns false or `max_nodes` search nodes
/// are spent.  Returns false when the search was cut short.
bool enumerate_automorphisms(const SimplicialComplex& K,
                             const std::function<bool(const std::vector<int>&)>& visit,
                             std::uint64_t max_nodes = UINT64_MAX);

/// A memoization key that is invariant under relabeling for small complexes
/// (canonical labeling search, capped), and falls back to the labeled facet
/// encoding when the cap is hit.  Always sound as an exact-equality key.
std::string memo_key(const SimplicialComplex& K);

}  // namespace wreath
