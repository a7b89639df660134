#include "wreath/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "wreath/constructions.hpp"

namespace wreath {

namespace {

bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // (f after g): x -> f[g[x]]
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

}  // namespace

Int group_order(const std::vector<std::vector<int>>& generators, int n) {
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators)
    if (!is_identity(g)) gens.push_back(g);
  if (gens.empty()) return 1;

  // smallest moved point
  int base = -1;
  for (int x = 0; x < n && base < 0; ++x)
    for (const auto& g : gens)
      if (g[x] != x) {
        base = x;
        break;
      }

  // orbit of the base point with a transversal
  std::vector<int> rep_of(n, -1);  // index into transversal
  std::vector<std::vector<int>> transversal;
  std::vector<int> orbit{base};
  rep_of[base] = 0;
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  transversal.push_back(identity);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    int x = orbit[head];
    for (const auto& g : gens) {
      int y = g[x];
      if (rep_of[y] < 0) {
        rep_of[y] = static_cast<int>(transversal.size());
        transversal.push_back(compose(g, transversal[rep_of[x]]));
        orbit.push_back(y);
      }
    }
  }

  // Schreier generators for the stabilizer of the base point
  std::set<std::vector<int>> stab;
  for (int x : orbit)
    for (const auto& g : gens) {
      auto s = compose(inverse(transversal[rep_of[g[x]]]), compose(g, transversal[rep_of[x]]));
      if (!is_identity(s)) stab.insert(std::move(s));
    }
  std::vector<std::vector<int>> next(stab.begin(), stab.end());
  return Int(orbit.size()) * group_order(next, n);
}

PermutationGroup automorphism_group(const SimplicialComplex& K, std::uint64_t budget) {
  PermutationGroup g;
  g.domain = K.vertex_labels();
  const int n = K.vertex_count();
  if (n == 0) return g;

  Int count = 0;
  std::vector<std::vector<int>> gens;
  Int gen_order = 1;
  bool complete = enumerate_automorphisms(
      K,
      [&](const std::vector<int>& perm) {
        ++count;
        if (is_identity(perm)) return true;
        // keep a generator only when it grows the generated subgroup
        Int with = group_order([&] {
          auto tmp = gens;
          tmp.push_back(perm);
          return tmp;
        }(), n);
        if (with > gen_order) {
          gens.push_back(perm);
          gen_order = with;
        }
        return true;
      },
      budget);

  g.generators = std::move(gens);
  g.complete = complete;
  g.order = complete ? count : gen_order;
  if (complete && gen_order != count)
    throw std::logic_error("stabilizer chain order disagrees with enumeration");
  return g;
}

bool single_orbit(const PermutationGroup& g) {
  const int n = static_cast<int>(g.domain.size());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (const auto& p : g.generators)
      if (!seen[p[x]]) {
        seen[p[x]] = 1;
        ++reached;
        queue.push_back(p[x]);
      }
  }
  return reached == n;
}

bool is_vertex_transitive(const SimplicialComplex& K, std::uint64_t budget) {
  PermutationGroup g = automorphism_group(K, budget);
  if (single_orbit(g)) return true;
  if (!g.complete)
    throw std::runtime_error("automorphism search budget exhausted before transitivity was decided");
  return false;
}

PermutationGroup wreath_group_generators(int d, const SimplicialComplex& K,
                                         const PermutationGroup& autK) {
  if (d < 0) throw std::invalid_argument("wreath group needs d >= 0");
  if (autK.domain != K.vertex_labels())
    throw std::invalid_argument("automorphism group domain does not match the complex");
  if (d == 0) return autK;

  SimplicialComplex W = wreath_product(d, K);
  PermutationGroup g;
  g.domain = W.vertex_labels();
  const int n = K.vertex_count();
  const int N = W.vertex_count();

  auto copy_index = [&](const VertexLabel& base, int i) {
    auto idx = W.vertex_index(base + "^" + std::to_string(i));
    if (!idx) throw std::logic_error("missing wreath copy label");
    return *idx;
  };

  std::vector<int> identity(N);
  for (int i = 0; i < N; ++i) identity[i] = i;

  // copy permutations within one block generate the symmetric group there
  for (int b = 0; b < n; ++b) {
    const VertexLabel& base = K.vertex(b);
    auto swap_gen = identity;
    std::swap(swap_gen[copy_index(base, 1)], swap_gen[copy_index(base, 2)]);
    g.generators.push_back(swap_gen);
    if (d >= 2) {
      auto cycle_gen = identity;
      for (int i = 1; i <= d + 1; ++i)
        cycle_gen[copy_index(base, i)] = copy_index(base, i % (d + 1) + 1);
      g.generators.push_back(cycle_gen);
    }
  }
  // automorphisms of K permute the blocks, carrying copy indices along
  for (const auto& a : autK.generators) {
    auto lifted = identity;
    for (int b = 0; b < n; ++b) {
      const VertexLabel& from = K.vertex(b);
      const VertexLabel& to = K.vertex(a[b]);
      for (int i = 1; i <= d + 1; ++i) lifted[copy_index(from, i)] = copy_index(to, i);
    }
    g.generators.push_back(lifted);
  }

  // every generator must map the wreath facet list onto itself
  std::unordered_set<FaceBits, FaceBitsHash> facet_set(W.facet_bits().begin(),
                                                       W.facet_bits().end());
  for (const auto& p : g.generators) {
    for (const auto& f : W.facet_bits()) {
      FaceBits image;
      f.for_each([&](int v) { image.set(p[v]); });
      if (!facet_set.count(image))
        throw std::logic_error("wreath group generator does not preserve the facets");
    }
  }

  g.order = int_pow(factorial(d + 1), static_cast<unsigned long>(n)) * autK.order;
  if (group_order(g.generators, N) != g.order)
    throw std::logic_error("wreath group order does not match ((d+1)!)^n * |Aut K|");
  g.complete = autK.complete;
  return g;
}

std::string cycle_notation(const std::vector<VertexLabel>& domain,
                           const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += domain[x];
      first = false;
      x = perm[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace wreath
