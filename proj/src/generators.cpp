#include "wreath/generators.hpp"

#include <stdexcept>

namespace wreath {

namespace {

VertexLabel nat(int i) { return std::to_string(i); }

std::vector<VertexLabel> nat_range(int n) {
  std::vector<VertexLabel> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(nat(i));
  return out;
}

}  // namespace

SimplicialComplex simplex(int k) {
  if (k < -1) throw std::invalid_argument("simplex dimension must be >= -1");
  return SimplicialComplex::from_facets({Simplex(nat_range(k + 1))});
}

SimplicialComplex simplex_boundary(int k) {
  if (k < 0) throw std::invalid_argument("simplex boundary needs dimension >= 0");
  if (k == 0) return SimplicialComplex::from_facets({Simplex{}});
  std::vector<Simplex> facets;
  for (int omit = 1; omit <= k + 1; ++omit) {
    std::vector<VertexLabel> vs;
    for (int i = 1; i <= k + 1; ++i)
      if (i != omit) vs.push_back(nat(i));
    facets.push_back(Simplex(std::move(vs)));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Simplex> facets;
  for (int i = 1; i <= n; ++i) facets.push_back(Simplex{nat(i), nat(i % n + 1)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex path(int n) {
  if (n < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<Simplex> facets;
  for (int i = 1; i < n; ++i) facets.push_back(Simplex{nat(i), nat(i + 1)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope_boundary(int k) {
  if (k < 1) throw std::invalid_argument("cross-polytope dimension must be >= 1");
  // one vertex from each diagonal pair {2i-1, 2i}
  std::vector<Simplex> facets;
  for (int signs = 0; signs < (1 << k); ++signs) {
    std::vector<VertexLabel> vs;
    for (int i = 0; i < k; ++i) vs.push_back(nat(2 * i + 1 + ((signs >> i) & 1)));
    facets.push_back(Simplex(std::move(vs)));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cyclic_polytope_boundary(int e, int n) {
  if (e < 2) throw std::invalid_argument("cyclic polytope dimension must be >= 2");
  if (n < e + 1) throw std::invalid_argument("cyclic polytope needs at least e+1 vertices");

  // Gale evenness on subsets S of {1..n}: every maximal run of S bounded on
  // both sides by non-elements must have even length.
  auto evenness = [&](const std::vector<int>& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = i;
      while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
      bool touches_end = (s[i] == 1) || (s[j] == n);
      if (!touches_end && (j - i + 1) % 2 != 0) return false;
      i = j + 1;
    }
    return true;
  };

  std::vector<Simplex> facets;
  std::vector<int> pick(e);
  for (int i = 0; i < e; ++i) pick[i] = i + 1;
  while (true) {
    if (evenness(pick)) {
      std::vector<VertexLabel> vs;
      for (int x : pick) vs.push_back(nat(x));
      facets.push_back(Simplex(std::move(vs)));
    }
    int pos = e - 1;
    while (pos >= 0 && pick[pos] == n - e + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < e; ++i) pick[i] = pick[i - 1] + 1;
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace wreath
