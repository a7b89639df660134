#pragma once

#include <map>

#include "wreath/complex.hpp"

namespace wreath {

/// Labels of the two copies a one-point suspension at v would create:
/// v + "'" and v + "''", with apostrophes appended further on collision.
std::pair<VertexLabel, VertexLabel> suspension_copy_labels(const SimplicialComplex& K,
                                                           const VertexLabel& v);

/// One-point suspension of K at v.  Facets come in three kinds: v'*F and
/// v''*F for each facet F avoiding v, and v'v''*(G - v) for each facet G
/// through v.  Built directly from this facet description.
SimplicialComplex one_point_suspension(const SimplicialComplex& K, const VertexLabel& v);

/// Replay data for the d suspensions behind a reduced join, so that
/// certificate lifts can walk the same steps.
struct ReducedJoinTrace {
  std::vector<VertexLabel> suspend_at;            // vertex split at each step
  std::map<VertexLabel, VertexLabel> renaming;    // final copies -> "v^i"
  SimplicialComplex result;
};

/// Reduced join of K with a d-simplex boundary at v: d iterated one-point
/// suspensions of v and its copies, final copies renamed v^1..v^{d+1}.
/// d = 0 returns K unchanged.
SimplicialComplex reduced_join(int d, const SimplicialComplex& K, const VertexLabel& v);
ReducedJoinTrace reduced_join_trace(int d, const SimplicialComplex& K,
                                    const VertexLabel& v);

/// Wreath product of a d-simplex boundary with K, materialized.  Vertices
/// are the copies "v^1".."v^{d+1}" of each vertex v of K; each facet picks
/// all copies over a facet F of K and omits exactly one copy per vertex
/// outside F.  d = 0 returns K.
SimplicialComplex wreath_product(int d, const SimplicialComplex& K);

/// Number of wreath facets, without materializing: sum over facets F of K
/// of (d+1)^(n-|F|).
Int wreath_facet_count(int d, const SimplicialComplex& K);

/// Lazy, single-pass enumeration of the wreath facets in canonical order.
class WreathFacets {
  SimplicialComplex base_;
  int d_;

 public:
  WreathFacets(int d, SimplicialComplex K);

  class iterator {
    const WreathFacets* owner_ = nullptr;
    std::size_t facet_ = 0;
    std::vector<int> outside_;  // vertex indices outside the current facet
    std::vector<int> omit_;     // odometer: which copy is omitted, 1-based

    void load_facet();
    friend class WreathFacets;

   public:
    using value_type = Simplex;
    Simplex operator*() const;
    iterator& operator++();
    bool operator==(const iterator& o) const {
      return owner_ == o.owner_ && facet_ == o.facet_ && omit_ == o.omit_;
    }
  };

  iterator begin() const;
  iterator end() const;
  Int size() const;
};

/// Evaluates the closed-form f-vector of the wreath product of a d-simplex
/// boundary with a complex whose f-vector is fK (n = f_0).  All arithmetic
/// exact; entries indexed 0..nd+e-1.
FVector wreath_f_vector_formula(int d, const FVector& fK, int n);

/// Both orders of applying two reduced joins, compared up to isomorphism.
bool verify_reduced_join_commutes(const SimplicialComplex& K, const VertexLabel& v1,
                                  const VertexLabel& v2, int d1, int d2);

}  // namespace wreath
