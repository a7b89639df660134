#include "wreath/complex.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wreath {

bool valid_vertex_label(const VertexLabel& name) {
  if (name.empty()) return false;
  for (unsigned char c : name)
    if (std::isspace(c) || c == '#') return false;
  return true;
}

// --- Simplex ----------------------------------------------------------------

Simplex::Simplex(std::vector<VertexLabel> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("duplicate vertex label in simplex");
}

Simplex::Simplex(std::initializer_list<VertexLabel> verts)
    : Simplex(std::vector<VertexLabel>(verts)) {}

bool Simplex::contains(const VertexLabel& v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& o) const {
  return std::includes(o.verts_.begin(), o.verts_.end(), verts_.begin(), verts_.end());
}

Simplex Simplex::with(const VertexLabel& v) const {
  if (contains(v)) return *this;
  auto out = verts_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  Simplex s;
  s.verts_ = std::move(out);
  return s;
}

Simplex Simplex::without(const VertexLabel& v) const {
  Simplex s;
  s.verts_.reserve(verts_.size());
  for (const auto& u : verts_)
    if (u != v) s.verts_.push_back(u);
  return s;
}

bool Simplex::operator<(const Simplex& o) const {
  return std::lexicographical_compare(verts_.begin(), verts_.end(),
                                      o.verts_.begin(), o.verts_.end());
}

std::string Simplex::to_string() const {
  if (verts_.empty()) return "EMPTYFACET";
  std::string out;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) out += ' ';
    out += verts_[i];
  }
  return out;
}

std::string FVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ' ';
    out += counts[i].str();
  }
  return out;
}

// --- SimplicialComplex ------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<VertexLabel> verts,
                                     std::vector<FaceBits> facets)
    : verts_(std::move(verts)), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  return from_facets(facets, nullptr);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets,
                                                 std::size_t* pruned) {
  std::set<VertexLabel> labels;
  for (const auto& f : facets)
    for (const auto& v : f.vertices()) {
      if (!valid_vertex_label(v))
        throw std::invalid_argument("invalid vertex label '" + v + "'");
      labels.insert(v);
    }
  std::vector<VertexLabel> verts(labels.begin(), labels.end());
  if (verts.size() > FaceBits::capacity)
    throw std::invalid_argument("complex has more than 256 vertices");

  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

  std::vector<FaceBits> bits;
  bits.reserve(facets.size());
  for (const auto& f : facets) {
    FaceBits b;
    for (const auto& v : f.vertices()) b.set(index.at(v));
    bits.push_back(b);
  }

  // Keep inclusion-maximal candidates only (duplicates count as contained).
  std::vector<FaceBits> maximal;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < bits.size() && !dominated; ++j) {
      if (i == j) continue;
      if (bits[i].is_subset_of(bits[j]) && !(bits[j].is_subset_of(bits[i]) && i < j))
        dominated = true;
    }
    if (!dominated) maximal.push_back(bits[i]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const FaceBits& a, const FaceBits& b) { return a.lex_less(b); });
  if (pruned) *pruned = facets.size() - maximal.size();

  // Vertices were collected from all candidates; after pruning every vertex
  // still lies in some maximal face (a subset never drops a vertex union).
  return SimplicialComplex(std::move(verts), std::move(maximal));
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::invalid_argument("dimension of the void complex");
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.count() - 1);
  return d;
}

std::optional<int> SimplicialComplex::vertex_index(const VertexLabel& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - verts_.begin());
}

Simplex SimplicialComplex::facet(std::size_t i) const { return to_simplex(facets_[i]); }

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(to_simplex(f));
  return out;
}

Simplex SimplicialComplex::to_simplex(const FaceBits& b) const {
  std::vector<VertexLabel> names;
  b.for_each([&](int i) { names.push_back(verts_[i]); });
  return Simplex(std::move(names));
}

std::optional<FaceBits> SimplicialComplex::to_bits(const Simplex& s) const {
  FaceBits b;
  for (const auto& v : s.vertices()) {
    auto i = vertex_index(v);
    if (!i) return std::nullopt;
    b.set(*i);
  }
  return b;
}

bool SimplicialComplex::contains(const FaceBits& b) const {
  for (const auto& f : facets_)
    if (b.is_subset_of(f)) return true;
  return false;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  auto b = to_bits(s);
  return b && contains(*b);
}

bool SimplicialComplex::is_k_neighborly(int k) const {
  const int n = vertex_count();
  if (k <= 0) return true;
  if (k > n) return true;  // vacuous

  // Per-vertex incidence mask over facets; a set is a face iff the masks of
  // its vertices intersect in at least one facet.
  const std::size_t words = (facets_.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> inc(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t fi = 0; fi < facets_.size(); ++fi)
    facets_[fi].for_each([&](int v) { inc[v][fi >> 6] |= std::uint64_t{1} << (fi & 63); });

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::uint64_t> acc(words);
  while (true) {
    acc = inc[pick[0]];
    bool alive = true;
    for (int i = 1; i < k && alive; ++i) {
      alive = false;
      for (std::size_t w = 0; w < words; ++w) {
        acc[w] &= inc[pick[i]][w];
        if (acc[w]) alive = true;
      }
    }
    if (!alive) return false;

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return true;
}

std::optional<std::vector<FaceBits>> SimplicialComplex::all_faces(std::size_t cap) const {
  std::unordered_set<FaceBits, FaceBitsHash> seen;
  std::vector<FaceBits> stack;
  for (const auto& f : facets_) {
    if (f.empty()) continue;
    if (seen.insert(f).second) stack.push_back(f);
    while (!stack.empty()) {
      if (seen.size() > cap) return std::nullopt;
      FaceBits cur = stack.back();
      stack.pop_back();
      cur.for_each([&](int v) {
        FaceBits child = cur;
        child.reset(v);
        if (!child.empty() && seen.insert(child).second) stack.push_back(child);
      });
    }
  }
  std::vector<FaceBits> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const FaceBits& a, const FaceBits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });
  return out;
}

// --- subcomplex operators ---------------------------------------------------

namespace {

int require_vertex(const SimplicialComplex& K, const VertexLabel& v) {
  auto i = K.vertex_index(v);
  if (!i) throw std::invalid_argument("vertex not in complex: '" + v + "'");
  return *i;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& K, const VertexLabel& v) {
  int vi = require_vertex(K, v);
  std::vector<Simplex> out;
  for (const auto& f : K.facet_bits())
    if (f.test(vi)) {
      FaceBits g = f;
      g.reset(vi);
      out.push_back(K.to_simplex(g));
    }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex star(const SimplicialComplex& K, const VertexLabel& v) {
  int vi = require_vertex(K, v);
  std::vector<Simplex> out;
  for (const auto& f : K.facet_bits())
    if (f.test(vi)) out.push_back(K.to_simplex(f));
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex deletion(const SimplicialComplex& K, const VertexLabel& v) {
  int vi = require_vertex(K, v);
  std::vector<Simplex> out;
  for (const auto& f : K.facet_bits()) {
    FaceBits g = f;
    g.reset(vi);
    out.push_back(K.to_simplex(g));
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex link_of_face(const SimplicialComplex& K, const Simplex& g) {
  if (g.card() == 0) return K;
  auto gb = K.to_bits(g);
  if (!gb || !K.contains(*gb)) throw std::invalid_argument("not a face of the complex");
  std::vector<Simplex> out;
  for (const auto& f : K.facet_bits())
    if (gb->is_subset_of(f)) out.push_back(K.to_simplex(f - *gb));
  return SimplicialComplex::from_facets(out);
}

// --- global invariants --------------------------------------------------------

FVector f_vector(const SimplicialComplex& K) {
  if (K.is_void()) throw std::invalid_argument("f-vector of the void complex");
  FVector fv;
  int d = K.dimension();
  if (d < 0) return fv;  // the complex {()}: empty sequence
  fv.counts.assign(d + 1, 0);
  auto faces = K.all_faces();
  for (const auto& f : *faces) fv.counts[f.count() - 1] += 1;
  return fv;
}

bool is_pure(const SimplicialComplex& K) {
  if (K.is_void()) throw std::invalid_argument("purity of the void complex");
  for (const auto& f : K.facet_bits())
    if (f.count() != K.facet_bits().front().count()) return false;
  return true;
}

int dimension(const SimplicialComplex& K) { return K.dimension(); }

EulerCharacteristic euler_characteristic(const SimplicialComplex& K) {
  FVector fv = f_vector(K);
  Int chi = 0;
  for (std::size_t i = 0; i < fv.counts.size(); ++i)
    chi += (i % 2 == 0) ? fv.counts[i] : -fv.counts[i];
  return {chi, chi - 1};
}

SimplicialComplex rename_vertices(const SimplicialComplex& K,
                                  const std::map<VertexLabel, VertexLabel>& renaming) {
  auto mapped = [&](const VertexLabel& v) -> const VertexLabel& {
    auto it = renaming.find(v);
    return it == renaming.end() ? v : it->second;
  };
  std::vector<Simplex> out;
  for (const auto& f : K.facets()) {
    std::vector<VertexLabel> names;
    for (const auto& v : f.vertices()) names.push_back(mapped(v));
    out.push_back(Simplex(std::move(names)));
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  bool collide = false;
  for (const auto& v : K.vertex_labels())
    if (L.has_vertex(v)) {
      collide = true;
      break;
    }
  const SimplicialComplex* a = &K;
  const SimplicialComplex* b = &L;
  SimplicialComplex ra, rb;
  if (collide) {
    std::map<VertexLabel, VertexLabel> ma, mb;
    for (const auto& v : K.vertex_labels()) ma[v] = "L." + v;
    for (const auto& v : L.vertex_labels()) mb[v] = "R." + v;
    ra = rename_vertices(K, ma);
    rb = rename_vertices(L, mb);
    a = &ra;
    b = &rb;
  }
  std::vector<Simplex> out;
  for (const auto& f : a->facets())
    for (const auto& g : b->facets()) {
      std::vector<VertexLabel> names = f.vertices();
      names.insert(names.end(), g.vertices().begin(), g.vertices().end());
      out.push_back(Simplex(std::move(names)));
    }
  return SimplicialComplex::from_facets(out);
}

// --- isomorphism machinery ----------------------------------------------------

namespace {

// Iterated partition refinement.  Starts from a label-free invariant and
// refines vertex colors by the multiset of colored facets through each
// vertex until stable.  Operating on two complexes at once keeps the color
// ids comparable across them.
struct Refiner {
  const SimplicialComplex& A;
  const SimplicialComplex& B;
  std::vector<int> colorA, colorB;
  bool comparable = true;  // false once color histograms diverge

  Refiner(const SimplicialComplex& a, const SimplicialComplex& b, bool with_link_fvec)
      : A(a), B(b) {
    colorA.assign(A.vertex_count(), 0);
    colorB.assign(B.vertex_count(), 0);
    std::map<std::string, int> ids;
    auto initial = [&](const SimplicialComplex& K, std::vector<int>& color) {
      for (int v = 0; v < K.vertex_count(); ++v) {
        std::vector<int> sizes;
        for (const auto& f : K.facet_bits())
          if (f.test(v)) sizes.push_back(f.count());
        std::sort(sizes.begin(), sizes.end());
        std::ostringstream sig;
        for (int s : sizes) sig << s << ',';
        if (with_link_fvec) {
          sig << '|' << f_vector(link(K, K.vertex(v))).to_string();
        }
        auto [it, inserted] = ids.emplace(sig.str(), static_cast<int>(ids.size()));
        color[v] = it->second;
      }
    };
    initial(A, colorA);
    initial(B, colorB);
    normalize();
    while (comparable && !colorA.empty() && refine_round()) {
    }
  }

  // Renumber colors by (sorted signature order); verify both sides carry the
  // same color histogram.
  void normalize() {
    std::map<int, int> histA, histB;
    for (int c : colorA) histA[c]++;
    for (int c : colorB) histB[c]++;
    if (histA != histB) comparable = false;
  }

  bool refine_round() {
    std::map<std::string, int> ids;
    auto pass = [&](const SimplicialComplex& K, const std::vector<int>& color,
                    std::vector<int>& next) {
      std::vector<std::string> facet_keys;
      facet_keys.reserve(K.facet_count());
      for (const auto& f : K.facet_bits()) {
        std::vector<int> cs;
        f.for_each([&](int v) { cs.push_back(color[v]); });
        std::sort(cs.begin(), cs.end());
        std::ostringstream os;
        for (int c : cs) os << c << ',';
        facet_keys.push_back(os.str());
      }
      next.assign(K.vertex_count(), 0);
      for (int v = 0; v < K.vertex_count(); ++v) {
        std::vector<std::string> through;
        for (std::size_t fi = 0; fi < K.facet_count(); ++fi)
          if (K.facet_bits()[fi].test(v)) through.push_back(facet_keys[fi]);
        std::sort(through.begin(), through.end());
        std::ostringstream sig;
        sig << color[v] << '#';
        for (const auto& t : through) sig << t << ';';
        auto [it, inserted] = ids.emplace(sig.str(), static_cast<int>(ids.size()));
        next[v] = it->second;
      }
    };
    std::vector<int> nextA, nextB;
    pass(A, colorA, nextA);
    pass(B, colorB, nextB);
    int before = *std::max_element(colorA.begin(), colorA.end());
    int after = nextA.empty() ? 0 : *std::max_element(nextA.begin(), nextA.end());
    colorA = std::move(nextA);
    colorB = std::move(nextB);
    normalize();
    return comparable && after > before;
  }
};

// Backtracking search for color- and facet-compatible vertex bijections.
// Visits every complete bijection (as an index map A -> B) until the visitor
// declines or the node budget runs out.
struct MappingSearch {
  const SimplicialComplex& A;
  const SimplicialComplex& B;
  const std::vector<int>& colorA;
  const std::vector<int>& colorB;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  bool exhausted = true;

  std::vector<int> order;           // A-vertices in processing order
  std::vector<int> image;           // index map A -> B (-1 = unset)
  std::vector<bool> used;           // B-vertex already taken
  std::vector<FaceBits> candidates; // per A-facet: compatible B-facets
  std::vector<FaceBits> b_with;     // per B-vertex: facets through it

  MappingSearch(const SimplicialComplex& a, const SimplicialComplex& b,
                const std::vector<int>& ca, const std::vector<int>& cb,
                std::uint64_t budget)
      : A(a), B(b), colorA(ca), colorB(cb), max_nodes(budget) {
    order.resize(A.vertex_count());
    for (int v = 0; v < A.vertex_count(); ++v) order[v] = v;
    // Rarest colors first keeps the branching factor small.
    std::map<int, int> freq;
    for (int c : colorA) freq[c]++;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (freq[colorA[x]] != freq[colorA[y]]) return freq[colorA[x]] < freq[colorA[y]];
      if (colorA[x] != colorA[y]) return colorA[x] < colorA[y];
      return x < y;
    });
    image.assign(A.vertex_count(), -1);
    used.assign(B.vertex_count(), false);
    b_with.resize(B.vertex_count());
    for (std::size_t fi = 0; fi < B.facet_count(); ++fi)
      B.facet_bits()[fi].for_each([&](int v) { b_with[v].set(static_cast<int>(fi)); });
    candidates.resize(A.facet_count());
    for (std::size_t fi = 0; fi < A.facet_count(); ++fi)
      for (std::size_t gj = 0; gj < B.facet_count(); ++gj)
        if (A.facet_bits()[fi].count() == B.facet_bits()[gj].count())
          candidates[fi].set(static_cast<int>(gj));
  }

  bool run(const std::function<bool(const std::vector<int>&)>& visit) {
    return descend(0, visit);
  }

 private:
  // Returns false to abort the whole search (visitor said stop / budget).
  bool descend(std::size_t depth, const std::function<bool(const std::vector<int>&)>& visit) {
    if (++nodes > max_nodes) {
      exhausted = false;
      return false;
    }
    if (depth == order.size()) return visit(image);
    int u = order[depth];
    for (int w = 0; w < B.vertex_count(); ++w) {
      if (used[w] || colorB[w] != colorA[u]) continue;
      auto saved = candidates;
      bool ok = true;
      for (std::size_t fi = 0; fi < A.facet_count() && ok; ++fi) {
        if (A.facet_bits()[fi].test(u))
          candidates[fi] = candidates[fi] & b_with[w];
        else
          candidates[fi] = candidates[fi] - b_with[w];
        if (candidates[fi].empty()) ok = false;
      }
      if (ok) {
        image[u] = w;
        used[w] = true;
        if (!descend(depth + 1, visit)) return false;
        image[u] = -1;
        used[w] = false;
      }
      candidates = std::move(saved);
    }
    return true;
  }
};

bool quick_reject(const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.vertex_count() != L.vertex_count()) return true;
  if (K.facet_count() != L.facet_count()) return true;
  auto sizes = [](const SimplicialComplex& C) {
    std::vector<int> s;
    for (const auto& f : C.facet_bits()) s.push_back(f.count());
    std::sort(s.begin(), s.end());
    return s;
  };
  return sizes(K) != sizes(L);
}

}  // namespace

std::optional<std::map<VertexLabel, VertexLabel>> find_isomorphism(
    const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.is_void() || L.is_void()) {
    if (K.is_void() && L.is_void()) return std::map<VertexLabel, VertexLabel>{};
    return std::nullopt;
  }
  if (quick_reject(K, L)) return std::nullopt;
  if (K.facet_count() > FaceBits::capacity)
    throw std::invalid_argument("isomorphism search limited to 256 facets");

  Refiner ref(K, L, /*with_link_fvec=*/true);
  if (!ref.comparable) return std::nullopt;

  std::optional<std::map<VertexLabel, VertexLabel>> found;
  MappingSearch search(K, L, ref.colorA, ref.colorB, UINT64_MAX);
  search.run([&](const std::vector<int>& image) {
    std::map<VertexLabel, VertexLabel> witness;
    for (int v = 0; v < K.vertex_count(); ++v) witness[K.vertex(v)] = L.vertex(image[v]);
    found = std::move(witness);
    return false;  // first witness wins
  });
  return found;
}

bool is_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L) {
  return find_isomorphism(K, L).has_value();
}

bool enumerate_automorphisms(const SimplicialComplex& K,
                             const std::function<bool(const std::vector<int>&)>& visit,
                             std::uint64_t max_nodes) {
  if (K.is_void()) {
    visit({});
    return true;
  }
  Refiner ref(K, K, /*with_link_fvec=*/true);
  MappingSearch search(K, K, ref.colorA, ref.colorB, max_nodes);
  bool aborted_by_visitor = !search.run(visit);
  (void)aborted_by_visitor;
  return search.exhausted;
}

// --- memoization key ----------------------------------------------------------

namespace {

std::string encode_facets(const std::vector<FaceBits>& facets, int nverts) {
  std::ostringstream os;
  os << nverts << ':';
  std::vector<std::vector<int>> rows;
  for (const auto& f : facets) {
    std::vector<int> row;
    f.for_each([&](int v) { row.push_back(v); });
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    for (int v : row) os << v << ',';
    os << ';';
  }
  return os.str();
}

std::string encode_under(const SimplicialComplex& K, const std::vector<int>& perm) {
  // perm[old index] = new index
  std::vector<FaceBits> mapped;
  for (const auto& f : K.facet_bits()) {
    FaceBits g;
    f.for_each([&](int v) { g.set(perm[v]); });
    mapped.push_back(g);
  }
  return encode_facets(mapped, K.vertex_count());
}

// Canonical labeling by branch-and-bound over refinement-respecting
// orderings.  `nodes` caps the number of leaves visited; on overflow the
// caller falls back to the labeled encoding.
struct Canonicalizer {
  const SimplicialComplex& K;
  std::uint64_t nodes = 0, cap;
  std::optional<std::string> best;
  bool ok = true;

  Canonicalizer(const SimplicialComplex& k, std::uint64_t cap_) : K(k), cap(cap_) {}

  void run(std::vector<int> color) {
    recurse(std::move(color));
  }

  void recurse(std::vector<int> color) {
    if (!ok) return;
    // pick the smallest non-singleton color class
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < K.vertex_count(); ++v) cells[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (auto& [c, vs] : cells)
      if (vs.size() > 1) {
        target = &vs;
        break;
      }
    if (!target) {
      if (++nodes > cap) {
        ok = false;
        return;
      }
      // colors are distinct: order vertices by color
      std::vector<int> perm(K.vertex_count());
      std::vector<int> by_color(K.vertex_count());
      for (int v = 0; v < K.vertex_count(); ++v) by_color[v] = v;
      std::sort(by_color.begin(), by_color.end(),
                [&](int a, int b) { return color[a] < color[b]; });
      for (int pos = 0; pos < K.vertex_count(); ++pos) perm[by_color[pos]] = pos;
      std::string enc = encode_under(K, perm);
      if (!best || enc < *best) best = std::move(enc);
      return;
    }
    for (int v : *target) {
      std::vector<int> next = color;
      int fresh = *std::max_element(color.begin(), color.end()) + 1;
      next[v] = fresh;
      // re-refine relative to the individualized coloring
      refine_inplace(next);
      recurse(std::move(next));
      if (!ok) return;
    }
  }

  void refine_inplace(std::vector<int>& color) {
    while (true) {
      std::map<std::string, int> ids;
      std::vector<std::string> facet_keys;
      for (const auto& f : K.facet_bits()) {
        std::vector<int> cs;
        f.for_each([&](int v) { cs.push_back(color[v]); });
        std::sort(cs.begin(), cs.end());
        std::ostringstream os;
        for (int c : cs) os << c << ',';
        facet_keys.push_back(os.str());
      }
      std::vector<int> next(K.vertex_count());
      for (int v = 0; v < K.vertex_count(); ++v) {
        std::vector<std::string> through;
        for (std::size_t fi = 0; fi < K.facet_count(); ++fi)
          if (K.facet_bits()[fi].test(v)) through.push_back(facet_keys[fi]);
        std::sort(through.begin(), through.end());
        std::ostringstream sig;
        sig << color[v] << '#';
        for (const auto& t : through) sig << t << ';';
        auto [it, ins] = ids.emplace(sig.str(), static_cast<int>(ids.size()));
        next[v] = it->second;
      }
      if (next == color) return;
      int before = *std::max_element(color.begin(), color.end());
      int after = *std::max_element(next.begin(), next.end());
      color = std::move(next);
      if (after <= before) return;
    }
  }
};

}  // namespace

std::string memo_key(const SimplicialComplex& K) {
  if (K.is_void()) return "V|";
  if (K.vertex_count() == 0) return "E|";  // the complex {()}
  if (K.vertex_count() <= 12 && K.facet_count() <= 64) {
    // cheap label-free initial colors: facet-size multiset through each vertex
    std::vector<int> color(K.vertex_count(), 0);
    {
      std::map<std::vector<int>, int> ids;
      for (int v = 0; v < K.vertex_count(); ++v) {
        std::vector<int> sizes;
        for (const auto& f : K.facet_bits())
          if (f.test(v)) sizes.push_back(f.count());
        std::sort(sizes.begin(), sizes.end());
        auto [it, ins] = ids.emplace(sizes, static_cast<int>(ids.size()));
        color[v] = it->second;
      }
    }
    Canonicalizer canon(K, 4000);
    canon.refine_inplace(color);
    canon.run(color);
    if (canon.ok && canon.best) return "C|" + *canon.best;
  }
  return "L|" + encode_facets(K.facet_bits(), K.vertex_count());
}

}  // namespace wreath
