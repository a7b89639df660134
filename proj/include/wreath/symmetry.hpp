#pragma once

#include "wreath/complex.hpp"
#include "wreath/ints.hpp"

namespace wreath {

/// Group of facet-preserving vertex bijections, given by generators over a
/// fixed sorted label domain.  `order` is exact when `complete`; otherwise
/// the enumeration hit its budget and order is a lower bound.
struct PermutationGroup {
  std::vector<VertexLabel> domain;
  std::vector<std::vector<int>> generators;  // index permutations
  Int order = 1;
  bool complete = true;
};

/// Exact group order from generators by a stabilizer chain (orbit sizes
/// multiply along a base).
Int group_order(const std::vector<std::vector<int>>& generators, int n);

/// All facet-preserving vertex bijections, found by backtracking over the
/// refined vertex partition; returns a reduced generating set and the order.
PermutationGroup automorphism_group(const SimplicialComplex& K,
                                    std::uint64_t budget = 5'000'000);

/// Single vertex orbit under the group's generators.
bool single_orbit(const PermutationGroup& g);

/// Throws when the group could not be fully enumerated within budget and the
/// partial generators do not already act transitively.
bool is_vertex_transitive(const SimplicialComplex& K, std::uint64_t budget = 5'000'000);

/// The subgroup of the wreath-product automorphisms generated by copy
/// permutations inside each block together with lifted automorphisms of K.
/// Every generator is checked to map the wreath facet list onto itself, and
/// the stabilizer-chain order must equal ((d+1)!)^n * |Aut K|.
PermutationGroup wreath_group_generators(int d, const SimplicialComplex& K,
                                         const PermutationGroup& autK);

std::string cycle_notation(const std::vector<VertexLabel>& domain,
                           const std::vector<int>& perm);

}  // namespace wreath
