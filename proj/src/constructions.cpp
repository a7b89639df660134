#include "wreath/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wreath {

namespace {

VertexLabel copy_label(const VertexLabel& base, int i) {
  return base + "^" + std::to_string(i);
}

}  // namespace

std::pair<VertexLabel, VertexLabel> suspension_copy_labels(const SimplicialComplex& K,
                                                           const VertexLabel& v) {
  // smallest k with both v+("'" x k) and v+("'" x (k+1)) unused
  std::string primes = "'";
  while (true) {
    VertexLabel upper = v + primes;
    VertexLabel lower = v + primes + "'";
    bool clash = false;
    for (const auto& u : K.vertex_labels())
      if (u != v && (u == upper || u == lower)) clash = true;
    if (!clash) return {upper, lower};
    primes += "'";
  }
}

SimplicialComplex one_point_suspension(const SimplicialComplex& K, const VertexLabel& v) {
  if (!K.has_vertex(v)) throw std::invalid_argument("vertex not in complex: '" + v + "'");
  auto [vp, vpp] = suspension_copy_labels(K, v);
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    if (f.contains(v)) {
      out.push_back(f.without(v).with(vp).with(vpp));
    } else {
      out.push_back(f.with(vp));
      out.push_back(f.with(vpp));
    }
  }
  return SimplicialComplex::from_facets(out);
}

ReducedJoinTrace reduced_join_trace(int d, const SimplicialComplex& K,
                                    const VertexLabel& v) {
  if (d < 0) throw std::invalid_argument("reduced join needs d >= 0");
  if (!K.has_vertex(v)) throw std::invalid_argument("vertex not in complex: '" + v + "'");

  ReducedJoinTrace trace;
  trace.result = K;
  if (d == 0) return trace;

  std::set<VertexLabel> copies{v};
  for (int step = 0; step < d; ++step) {
    VertexLabel target = *copies.begin();  // lexicographically smallest copy
    trace.suspend_at.push_back(target);
    auto [up, down] = suspension_copy_labels(trace.result, target);
    trace.result = one_point_suspension(trace.result, target);
    copies.erase(target);
    copies.insert(up);
    copies.insert(down);
  }

  // Rename the d+1 copies to v^1..v^{d+1}; on collision with a remaining
  // label, append apostrophes to all targets.
  std::string suffix;
  while (true) {
    bool clash = false;
    for (int i = 1; i <= d + 1 && !clash; ++i) {
      VertexLabel want = copy_label(v, i) + suffix;
      if (trace.result.has_vertex(want) && !copies.count(want)) clash = true;
    }
    if (!clash) break;
    suffix += "'";
  }
  int idx = 1;
  for (const auto& c : copies) trace.renaming[c] = copy_label(v, idx++) + suffix;
  trace.result = rename_vertices(trace.result, trace.renaming);
  return trace;
}

SimplicialComplex reduced_join(int d, const SimplicialComplex& K, const VertexLabel& v) {
  return reduced_join_trace(d, K, v).result;
}

// --- wreath product -----------------------------------------------------------

SimplicialComplex wreath_product(int d, const SimplicialComplex& K) {
  if (d < 0) throw std::invalid_argument("wreath product needs d >= 0");
  if (K.vertex_count() < 1)
    throw std::invalid_argument("wreath product needs a complex with vertices");
  if (d == 0) return K;

  std::vector<Simplex> out;
  for (const Simplex& s : WreathFacets(d, K)) out.push_back(s);
  return SimplicialComplex::from_facets(out);
}

Int wreath_facet_count(int d, const SimplicialComplex& K) {
  if (d < 0) throw std::invalid_argument("wreath product needs d >= 0");
  if (K.vertex_count() < 1)
    throw std::invalid_argument("wreath product needs a complex with vertices");
  const int n = K.vertex_count();
  Int total = 0;
  for (const auto& f : K.facet_bits())
    total += int_pow(d + 1, static_cast<unsigned long>(n - f.count()));
  return total;
}

WreathFacets::WreathFacets(int d, SimplicialComplex K) : base_(std::move(K)), d_(d) {
  if (d < 1) throw std::invalid_argument("facet enumeration needs d >= 1");
  if (base_.vertex_count() < 1)
    throw std::invalid_argument("wreath product needs a complex with vertices");
}

void WreathFacets::iterator::load_facet() {
  outside_.clear();
  if (facet_ >= owner_->base_.facet_count()) {
    omit_.clear();
    return;
  }
  const FaceBits& f = owner_->base_.facet_bits()[facet_];
  for (int v = 0; v < owner_->base_.vertex_count(); ++v)
    if (!f.test(v)) outside_.push_back(v);
  omit_.assign(outside_.size(), 1);
}

Simplex WreathFacets::iterator::operator*() const {
  const SimplicialComplex& K = owner_->base_;
  const FaceBits& f = K.facet_bits()[facet_];
  std::vector<VertexLabel> names;
  f.for_each([&](int v) {
    for (int i = 1; i <= owner_->d_ + 1; ++i) names.push_back(copy_label(K.vertex(v), i));
  });
  for (std::size_t pos = 0; pos < outside_.size(); ++pos)
    for (int i = 1; i <= owner_->d_ + 1; ++i)
      if (i != omit_[pos]) names.push_back(copy_label(K.vertex(outside_[pos]), i));
  return Simplex(std::move(names));
}

WreathFacets::iterator& WreathFacets::iterator::operator++() {
  int pos = static_cast<int>(omit_.size()) - 1;
  while (pos >= 0 && omit_[pos] == owner_->d_ + 1) --pos;
  if (pos < 0) {
    ++facet_;
    load_facet();
    return *this;
  }
  ++omit_[pos];
  for (std::size_t i = pos + 1; i < omit_.size(); ++i) omit_[i] = 1;
  return *this;
}

WreathFacets::iterator WreathFacets::begin() const {
  iterator it;
  it.owner_ = this;
  it.facet_ = 0;
  it.load_facet();
  return it;
}

WreathFacets::iterator WreathFacets::end() const {
  iterator it;
  it.owner_ = this;
  it.facet_ = base_.facet_count();
  it.load_facet();
  return it;
}

Int WreathFacets::size() const { return wreath_facet_count(d_, base_); }

// --- closed-form f-vector -------------------------------------------------------

FVector wreath_f_vector_formula(int d, const FVector& fK, int n) {
  if (d < 0) throw std::invalid_argument("wreath product needs d >= 0");
  if (fK.counts.empty() || fK.counts[0] != n)
    throw std::invalid_argument("f-vector inconsistent with vertex count n");
  if (d == 0) return fK;

  const int e = fK.dim() + 1;
  const long top = static_cast<long>(n) * d + e - 1;

  auto f_km1 = [&](long j) -> Int {
    if (j == 0) return 1;  // f_{-1}
    return fK.counts[j - 1];
  };

  FVector out;
  out.counts.assign(top + 1, 0);
  for (long i = 0; i <= top; ++i) {
    long jlo = std::max<long>(0, i + 1 - static_cast<long>(n) * d);
    long jhi = std::min<long>(e, (i + 1) / (d + 1));
    Int total = 0;
    for (long j = jlo; j <= jhi; ++j) {
      long target = i + 1 - j * (d + 1);
      // sum over u_d, u_{d-1}, ..., u_1 >= 0 with sum k*u_k = target of the
      // product C(n-j-used, u_k) * C(d+1, k)^{u_k}
      Int inner = 0;
      auto recurse = [&](auto&& self, int k, long left, long used, Int partial) -> void {
        if (k == 0) {
          if (left == 0) inner += partial;
          return;
        }
        for (long u = 0; u * k <= left; ++u) {
          Int ways = binomial(n - j - used, u) * int_pow(binomial(d + 1, k), u);
          if (ways == 0 && u > 0) break;
          self(self, k - 1, left - u * k, used + u, partial * ways);
        }
      };
      recurse(recurse, d, target, 0, Int(1));
      total += f_km1(j) * inner;
    }
    out.counts[i] = total;
  }
  return out;
}

bool verify_reduced_join_commutes(const SimplicialComplex& K, const VertexLabel& v1,
                                  const VertexLabel& v2, int d1, int d2) {
  if (v1 == v2) throw std::invalid_argument("need two distinct vertices");
  SimplicialComplex a = reduced_join(d1, reduced_join(d2, K, v2), v1);
  SimplicialComplex b = reduced_join(d2, reduced_join(d1, K, v1), v2);
  return is_isomorphic(a, b);
}

}  // namespace wreath
