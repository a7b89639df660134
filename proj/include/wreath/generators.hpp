#pragma once

#include "wreath/complex.hpp"

namespace wreath {

// Standard input complexes.  Vertices are labeled "1".."n" in natural order.

/// The full k-simplex: one facet on k+1 vertices.  simplex(-1) is {()}.
SimplicialComplex simplex(int k);

/// Boundary of the k-simplex: all k-subsets of its k+1 vertices.
/// simplex_boundary(0) is {()} by convention.
SimplicialComplex simplex_boundary(int k);

/// The n-gon (n >= 3).
SimplicialComplex cycle(int n);

/// Path on n vertices (n >= 2), facets {12, 23, ...}.
SimplicialComplex path(int n);

/// Boundary of the k-dimensional cross-polytope, the join of k copies of
/// S^0 (k >= 1).  Vertices "1".."2k"; the pair {2i-1, 2i} is a diagonal.
SimplicialComplex cross_polytope_boundary(int k);

/// Boundary of the cyclic polytope C_e(n): the e-subsets of {1..n} whose
/// maximal runs strictly between two non-elements have even length (runs
/// touching position 1 or n are exempt).  Requires e >= 2, n >= e+1.
SimplicialComplex cyclic_polytope_boundary(int e, int n);

}  // namespace wreath
