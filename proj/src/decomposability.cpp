#include "wreath/decomposability.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wreath/constructions.hpp"
#include "wreath/topology.hpp"

namespace wreath {

// --- shelling verification ------------------------------------------------------

bool verify_shelling(const SimplicialComplex& K, const Shelling& order, std::string* why) {
  auto complain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (K.is_void()) return complain("void complex has no shelling");

  std::vector<Simplex> expected = K.facets();
  std::vector<Simplex> given = order;
  std::sort(given.begin(), given.end());
  if (given != expected) return complain("order is not a permutation of the facet list");

  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& cur = order[k].vertices();
    // maximal intersections with all earlier facets
    std::vector<std::vector<VertexLabel>> inters;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<VertexLabel> common;
      std::set_intersection(cur.begin(), cur.end(), order[j].vertices().begin(),
                            order[j].vertices().end(), std::back_inserter(common));
      inters.push_back(std::move(common));
    }
    const std::size_t want = cur.size() - 1;
    for (const auto& a : inters) {
      if (a.size() == want) continue;
      bool covered = false;
      for (const auto& b : inters)
        if (b.size() == want && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
          covered = true;
          break;
        }
      if (!covered)
        return complain("step " + std::to_string(k + 1) + " (" + order[k].to_string() +
                        "): intersection with earlier facets is not pure of codimension 1");
    }
  }
  return true;
}

std::string serialize_shelling(const Shelling& order) {
  std::string out;
  for (const auto& f : order) out += f.to_string() + "\n";
  return out;
}

Shelling parse_shelling(std::istream& in) {
  Shelling out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::vector<VertexLabel> labels;
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
    if (labels.size() == 1 && labels[0] == "EMPTYFACET")
      out.push_back(Simplex{});
    else
      out.push_back(Simplex(labels));
  }
  return out;
}

// --- Morse matching verification --------------------------------------------------

namespace {

// all faces including the empty one, with an index lookup
struct FaceUniverse {
  std::vector<FaceBits> faces;  // index 0 = empty face
  std::unordered_map<FaceBits, int, FaceBitsHash> index;

  explicit FaceUniverse(const SimplicialComplex& K) {
    faces.push_back(FaceBits{});
    auto rest = K.all_faces();
    for (const auto& f : *rest) faces.push_back(f);
    for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);
  }
};

}  // namespace

MatchingCheck verify_morse_matching(const SimplicialComplex& K, const MorseMatching& mu) {
  if (K.is_void()) return {false, "void complex"};
  FaceUniverse u(K);
  const int N = static_cast<int>(u.faces.size());

  std::vector<int> mate(N, -1);
  for (const auto& [lo, hi] : mu.pairs) {
    auto lb = K.to_bits(lo), hb = K.to_bits(hi);
    if (!lb || !hb || !u.index.count(*lb) || !u.index.count(*hb))
      return {false,
              "pair (" + lo.to_string() + ", " + hi.to_string() + ") uses a non-face"};
    if (!(lb->is_subset_of(*hb)) || hb->count() != lb->count() + 1)
      return {false, "pair (" + lo.to_string() + ", " + hi.to_string() +
                         ") is not a cover relation"};
    int a = u.index.at(*lb), b = u.index.at(*hb);
    if (mate[a] != -1 || mate[b] != -1)
      return {false, "face matched twice: " + (mate[a] != -1 ? lo : hi).to_string()};
    mate[a] = b;
    mate[b] = a;
  }
  for (int i = 0; i < N; ++i)
    if (mate[i] == -1)
      return {false, "unmatched face: " + K.to_simplex(u.faces[i]).to_string()};

  // modified Hasse digraph: unmatched cover edges point up, matched ones down
  std::vector<std::vector<int>> out(N);
  for (int b = 0; b < N; ++b) {
    const FaceBits& face = u.faces[b];
    face.for_each([&](int v) {
      FaceBits sub = face;
      sub.reset(v);
      int a = u.index.at(sub);
      if (mate[a] == b)
        out[b].push_back(a);
      else
        out[a].push_back(b);
    });
  }
  // iterative three-state depth-first cycle detection
  std::vector<int> state(N, 0);  // 0 new, 1 on path, 2 done
  std::vector<int> stack;
  for (int s = 0; s < N; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      if (state[x] == 0) {
        state[x] = 1;
        for (int y : out[x]) {
          if (state[y] == 1)
            return {false, "matching is not acyclic (cycle through " +
                               K.to_simplex(u.faces[y]).to_string() + ")"};
          if (state[y] == 0) stack.push_back(y);
        }
      } else {
        if (state[x] == 1) state[x] = 2;
        stack.pop_back();
      }
    }
  }
  return {true, ""};
}

std::optional<VertexLabel> critical_vertex(const MorseMatching& mu) {
  for (const auto& [lo, hi] : mu.pairs)
    if (lo.card() == 0 && hi.card() == 1) return hi.vertices().front();
  return std::nullopt;
}

std::string serialize_matching(const MorseMatching& mu) {
  auto sorted = mu.pairs;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [lo, hi] : sorted) out += lo.to_string() + " -> " + hi.to_string() + "\n";
  return out;
}

MorseMatching parse_matching(std::istream& in) {
  MorseMatching mu;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::runtime_error("matching line without '->': " + line);
    auto parse_side = [](const std::string& part) {
      std::istringstream ps(part);
      std::vector<VertexLabel> labels;
      std::string tok;
      while (ps >> tok) labels.push_back(tok);
      if (labels.size() == 1 && labels[0] == "EMPTYFACET") return Simplex{};
      return Simplex(labels);
    };
    mu.pairs.emplace_back(parse_side(line.substr(0, arrow)),
                          parse_side(line.substr(arrow + 2)));
  }
  return mu;
}

// --- recursive checkers -----------------------------------------------------------
//
// The three recursive searches below share a pattern: a memoized yes/no
// decision procedure, and a separate certificate reconstruction that replays
// the first successful branch against the (now warm) memo table.

namespace {

struct RecursiveSearch {
  std::uint64_t nodes = 0, budget;
  bool out_of_budget = false;
  std::unordered_map<std::string, bool> memo;

  explicit RecursiveSearch(std::uint64_t b) : budget(b) {}

  bool charge() {
    if (++nodes > budget) out_of_budget = true;
    return !out_of_budget;
  }
};

// -- vertex decomposability --

struct VdSearch : RecursiveSearch {
  using RecursiveSearch::RecursiveSearch;

  // a shed at v needs the deletion to stay pure of the same dimension;
  // the link of a vertex in a pure complex is automatically pure, one lower
  static bool shed_ok(const SimplicialComplex& K, const SimplicialComplex& del) {
    return !del.is_void() && is_pure(del) && del.dimension() == K.dimension();
  }

  std::optional<bool> decide(const SimplicialComplex& K) {
    if (!charge()) return std::nullopt;
    if (K.facet_count() == 1) return true;
    std::string key = memo_key(K);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const VertexLabel& v = K.vertex(vi);
      SimplicialComplex del = deletion(K, v);
      if (!shed_ok(K, del)) continue;
      auto okl = decide(link(K, v));
      if (!okl) return std::nullopt;
      if (!*okl) continue;
      auto okd = decide(del);
      if (!okd) return std::nullopt;
      if (!*okd) continue;
      memo[key] = true;
      return true;
    }
    memo[key] = false;
    return false;
  }

  void reconstruct(const SimplicialComplex& K, std::string& tree, int depth) {
    std::string indent(2 * depth, ' ');
    if (K.facet_count() == 1) {
      tree += indent + "simplex " + K.facet(0).to_string() + "\n";
      return;
    }
    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const VertexLabel& v = K.vertex(vi);
      SimplicialComplex del = deletion(K, v);
      if (!shed_ok(K, del)) continue;
      SimplicialComplex lnk = link(K, v);
      if (decide(lnk) == std::optional<bool>(true) &&
          decide(del) == std::optional<bool>(true)) {
        tree += indent + "shed " + v + "\n" + indent + " link:\n";
        reconstruct(lnk, tree, depth + 1);
        tree += indent + " deletion:\n";
        reconstruct(del, tree, depth + 1);
        return;
      }
    }
    throw std::logic_error("certificate reconstruction lost the witness");
  }
};

// -- non-evasiveness --

struct NonEvasiveSearch : RecursiveSearch {
  using RecursiveSearch::RecursiveSearch;

  std::optional<bool> decide(const SimplicialComplex& K) {
    if (!charge()) return std::nullopt;
    if (K.vertex_count() == 1) return true;
    if (K.vertex_count() == 0) return false;  // {()} or void
    std::string key = memo_key(K);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const VertexLabel& v = K.vertex(vi);
      auto okl = decide(link(K, v));
      if (!okl) return std::nullopt;
      if (!*okl) continue;
      auto okd = decide(deletion(K, v));
      if (!okd) return std::nullopt;
      if (!*okd) continue;
      memo[key] = true;
      return true;
    }
    memo[key] = false;
    return false;
  }

  void reconstruct(const SimplicialComplex& K, std::string& tree, int depth) {
    std::string indent(2 * depth, ' ');
    if (K.vertex_count() == 1) {
      tree += indent + "point " + K.vertex(0) + "\n";
      return;
    }
    for (int vi = 0; vi < K.vertex_count(); ++vi) {
      const VertexLabel& v = K.vertex(vi);
      SimplicialComplex lnk = link(K, v), del = deletion(K, v);
      if (decide(lnk) == std::optional<bool>(true) &&
          decide(del) == std::optional<bool>(true)) {
        tree += indent + "probe " + v + "\n" + indent + " link:\n";
        reconstruct(lnk, tree, depth + 1);
        tree += indent + " deletion:\n";
        reconstruct(del, tree, depth + 1);
        return;
      }
    }
    throw std::logic_error("certificate reconstruction lost the witness");
  }
};

// -- constructibility --

struct ConstructibleSearch : RecursiveSearch {
  using RecursiveSearch::RecursiveSearch;

  struct Split {
    SimplicialComplex a, b, inter;
  };

  // bipartitions of the facet list with part A holding facet 0
  static std::optional<Split> split_for(const SimplicialComplex& K, std::uint64_t mask) {
    const std::size_t m = K.facet_count();
    std::vector<Simplex> fa, fb;
    for (std::size_t i = 0; i < m; ++i)
      (((mask >> i) & 1) ? fa : fb).push_back(K.facet(i));
    if (fa.empty() || fb.empty()) return std::nullopt;
    std::vector<Simplex> inter;
    for (const auto& x : fa)
      for (const auto& y : fb) {
        std::vector<VertexLabel> common;
        std::set_intersection(x.vertices().begin(), x.vertices().end(),
                              y.vertices().begin(), y.vertices().end(),
                              std::back_inserter(common));
        inter.push_back(Simplex(std::move(common)));
      }
    Split s{SimplicialComplex::from_facets(fa), SimplicialComplex::from_facets(fb),
            SimplicialComplex::from_facets(inter)};
    if (s.inter.is_void() || s.inter.dimension() != K.dimension() - 1 ||
        !is_pure(s.inter))
      return std::nullopt;
    return s;
  }

  std::optional<bool> decide(const SimplicialComplex& K) {
    if (!charge()) return std::nullopt;
    if (K.facet_count() == 1) return true;
    if (K.facet_count() > 62) {
      out_of_budget = true;  // bipartition space out of reach
      return std::nullopt;
    }
    std::string key = memo_key(K);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::size_t m = K.facet_count();
    for (std::uint64_t half = 0; half < (std::uint64_t{1} << (m - 1)); ++half) {
      std::uint64_t mask = (half << 1) | 1;
      auto s = split_for(K, mask);
      if (!s) continue;
      auto ok1 = decide(s->a);
      if (!ok1) return std::nullopt;
      if (!*ok1) continue;
      auto ok2 = decide(s->b);
      if (!ok2) return std::nullopt;
      if (!*ok2) continue;
      auto oki = decide(s->inter);
      if (!oki) return std::nullopt;
      if (!*oki) continue;
      memo[key] = true;
      return true;
    }
    memo[key] = false;
    return false;
  }

  void reconstruct(const SimplicialComplex& K, std::string& tree, int depth) {
    std::string indent(2 * depth, ' ');
    if (K.facet_count() == 1) {
      tree += indent + "simplex " + K.facet(0).to_string() + "\n";
      return;
    }
    const std::size_t m = K.facet_count();
    for (std::uint64_t half = 0; half < (std::uint64_t{1} << (m - 1)); ++half) {
      std::uint64_t mask = (half << 1) | 1;
      auto s = split_for(K, mask);
      if (!s) continue;
      if (decide(s->a) == std::optional<bool>(true) &&
          decide(s->b) == std::optional<bool>(true) &&
          decide(s->inter) == std::optional<bool>(true)) {
        tree += indent + "split " + std::to_string(s->a.facet_count()) + " + " +
                std::to_string(s->b.facet_count()) + " facets\n";
        tree += indent + " part A:\n";
        reconstruct(s->a, tree, depth + 1);
        tree += indent + " part B:\n";
        reconstruct(s->b, tree, depth + 1);
        tree += indent + " intersection:\n";
        reconstruct(s->inter, tree, depth + 1);
        return;
      }
    }
    throw std::logic_error("certificate reconstruction lost the witness");
  }
};

template <typename Search>
Verdict run_recursive(Search& search, const SimplicialComplex& K,
                      const char* fail_message) {
  Verdict v;
  auto r = search.decide(K);
  if (r && *r) {
    std::string tree;
    search.reconstruct(K, tree, 0);
    v.status = Status::holds;
    v.certificate = tree;
  } else if (!r) {
    v.status = Status::unknown;
    v.certificate = "budget exhausted";
  } else {
    v.status = Status::fails;
    v.certificate = fail_message;
  }
  v.nodes_explored = search.nodes;
  return v;
}

}  // namespace

Verdict is_vertex_decomposable(const SimplicialComplex& K, std::uint64_t budget) {
  if (K.is_void()) throw std::invalid_argument("vertex decomposability of the void complex");
  if (!is_pure(K)) throw std::invalid_argument("vertex decomposability needs a pure complex");
  VdSearch search(budget);
  return run_recursive(search, K, "exhaustive search: no shedding vertex sequence");
}

Verdict is_non_evasive(const SimplicialComplex& K, std::uint64_t budget) {
  Verdict v;
  if (K.is_void()) {
    v.status = Status::fails;
    v.certificate = "void complex";
    return v;
  }
  NonEvasiveSearch search(budget);
  return run_recursive(search, K,
                       "exhaustive search: every vertex has an evasive link or deletion");
}

Verdict is_constructible(const SimplicialComplex& K, std::uint64_t budget) {
  if (K.is_void()) throw std::invalid_argument("constructibility of the void complex");
  if (!is_pure(K)) throw std::invalid_argument("constructibility needs a pure complex");
  ConstructibleSearch search(budget);
  return run_recursive(search, K, "exhaustive search: no admissible bipartition");
}

// --- shelling search -----------------------------------------------------------

namespace {

struct ShellingSearch {
  const SimplicialComplex& K;
  std::uint64_t nodes = 0, budget;
  bool out_of_budget = false;
  std::unordered_set<FaceBits, FaceBitsHash> dead;  // used-facet sets that fail
  std::vector<int> order;

  ShellingSearch(const SimplicialComplex& k, std::uint64_t b) : K(k), budget(b) {}

  bool admissible(const FaceBits& used, int next) const {
    const FaceBits& f = K.facet_bits()[next];
    const int want = f.count() - 1;
    std::vector<FaceBits> inters;
    used.for_each([&](int j) { inters.push_back(f & K.facet_bits()[j]); });
    for (const auto& a : inters) {
      if (a.count() == want) continue;
      bool covered = false;
      for (const auto& b : inters)
        if (b.count() == want && a.is_subset_of(b)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  bool extend(FaceBits used, std::size_t placed) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (placed == K.facet_count()) return true;
    if (dead.count(used)) return false;
    for (int i = 0; i < static_cast<int>(K.facet_count()); ++i) {
      if (used.test(i)) continue;
      if (placed > 0 && !admissible(used, i)) continue;
      FaceBits next = used;
      next.set(i);
      order.push_back(i);
      if (extend(next, placed + 1)) return true;
      order.pop_back();
      if (out_of_budget) return false;
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

Verdict find_shelling(const SimplicialComplex& K, std::uint64_t budget) {
  if (K.is_void()) throw std::invalid_argument("shelling of the void complex");
  if (!is_pure(K)) throw std::invalid_argument("shellability needs a pure complex");
  Verdict v;
  if (K.facet_count() > FaceBits::capacity) {
    v.status = Status::unknown;
    v.certificate = "facet count exceeds search capacity";
    return v;
  }
  ShellingSearch search(K, budget);
  bool ok = search.extend(FaceBits{}, 0);
  v.nodes_explored = search.nodes;
  if (ok) {
    Shelling order;
    for (int i : search.order) order.push_back(K.facet(i));
    v.status = Status::holds;
    v.certificate = serialize_shelling(order);
  } else if (search.out_of_budget) {
    v.status = Status::unknown;
    v.certificate = "budget exhausted";
  } else {
    v.status = Status::fails;
    v.certificate = "exhaustive search: no facet order satisfies the shelling condition";
  }
  return v;
}

// --- cone ------------------------------------------------------------------------

Verdict is_cone(const SimplicialComplex& K) {
  Verdict v;
  if (K.is_void() || K.vertex_count() == 0) {
    v.status = Status::fails;
    v.certificate = "no vertex lies in every facet";
    return v;
  }
  FaceBits common = K.facet_bits().front();
  for (const auto& f : K.facet_bits()) common = common & f;
  if (common.empty()) {
    v.status = Status::fails;
    v.certificate = "no vertex lies in every facet";
  } else {
    v.status = Status::holds;
    v.certificate = "apex " + K.vertex(common.next(0));
  }
  return v;
}

// --- collapsibility -----------------------------------------------------------------

namespace {

// Collapse-sequence search over the face poset.  A face is free when exactly
// one other face properly contains it; since the surviving face set stays a
// complex, that is the same as having exactly one surviving cover.
struct CollapseSearch {
  const FaceUniverse& u;
  std::vector<std::vector<int>> covers, cofaces_of;
  std::uint64_t nodes = 0, budget;
  bool out_of_budget = false;
  std::unordered_set<std::string> dead;  // failed alive sets, stored exactly
  std::vector<std::pair<int, int>> collapsed;  // (lower, upper)

  CollapseSearch(const FaceUniverse& universe, std::uint64_t b) : u(universe), budget(b) {
    const int N = static_cast<int>(u.faces.size());
    covers.resize(N);
    cofaces_of.resize(N);
    for (int f = 0; f < N; ++f) {
      const FaceBits& face = u.faces[f];
      face.for_each([&](int v) {
        FaceBits sub = face;
        sub.reset(v);
        int a = u.index.at(sub);
        covers[f].push_back(a);
        cofaces_of[a].push_back(f);
      });
    }
  }

  bool search(std::vector<char>& alive, std::vector<int>& cover_count, int remaining) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (remaining == 2) {
      // must be the empty face plus one vertex
      if (alive[0]) {
        for (std::size_t i = 1; i < alive.size(); ++i)
          if (alive[i] && u.faces[i].count() == 1) {
            collapsed.emplace_back(0, static_cast<int>(i));
            return true;
          }
      }
      return false;
    }
    std::string key(alive.begin(), alive.end());
    if (dead.count(key)) return false;

    for (std::size_t lo = 1; lo < alive.size(); ++lo) {
      if (!alive[lo] || cover_count[lo] != 1) continue;
      int hi = -1;
      for (int c : cofaces_of[lo])
        if (alive[c]) hi = c;
      alive[lo] = alive[hi] = 0;
      for (int a : covers[lo]) --cover_count[a];
      for (int a : covers[hi]) --cover_count[a];
      collapsed.emplace_back(static_cast<int>(lo), hi);
      if (search(alive, cover_count, remaining - 2)) return true;
      collapsed.pop_back();
      alive[lo] = alive[hi] = 1;
      for (int a : covers[lo]) ++cover_count[a];
      for (int a : covers[hi]) ++cover_count[a];
      if (out_of_budget) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

}  // namespace

Verdict find_morse_matching(const SimplicialComplex& K, std::uint64_t budget) {
  Verdict v;
  if (K.is_void()) {
    v.status = Status::fails;
    v.certificate = "void complex";
    return v;
  }
  if (K.vertex_count() == 0) {
    v.status = Status::fails;
    v.certificate = "the complex {()} has no perfect matching";
    return v;
  }
  // cheap necessary conditions first
  auto chi = euler_characteristic(K);
  if (chi.chi_reduced != 0) {
    v.status = Status::fails;
    v.certificate = "Euler obstruction: reduced chi = " + chi.chi_reduced.str();
    return v;
  }
  auto h = reduced_homology(K);
  for (int i = 0; i <= h.top_dim(); ++i)
    if (!h.at(i).is_zero()) {
      v.status = Status::fails;
      v.certificate =
          "homology obstruction: H~_" + std::to_string(i) + " = " + h.at(i).to_string();
      return v;
    }

  FaceUniverse u(K);
  CollapseSearch search(u, budget);
  std::vector<char> alive(u.faces.size(), 1);
  std::vector<int> cover_count(u.faces.size(), 0);
  for (std::size_t i = 0; i < u.faces.size(); ++i)
    cover_count[i] = static_cast<int>(search.cofaces_of[i].size());
  bool ok = search.search(alive, cover_count, static_cast<int>(u.faces.size()));
  v.nodes_explored = search.nodes;
  if (ok) {
    MorseMatching mu;
    for (auto [lo, hi] : search.collapsed)
      mu.pairs.emplace_back(K.to_simplex(u.faces[lo]), K.to_simplex(u.faces[hi]));
    auto check = verify_morse_matching(K, mu);
    if (!check.ok)
      throw std::logic_error("collapse sequence failed verification: " + check.reason);
    v.status = Status::holds;
    v.certificate = serialize_matching(mu);
  } else if (search.out_of_budget) {
    v.status = Status::unknown;
    v.certificate = "budget exhausted";
  } else {
    v.status = Status::fails;
    v.certificate = "exhaustive search: no collapsing sequence";
  }
  return v;
}

// --- lifts ---------------------------------------------------------------------------

Shelling lift_shelling(const SimplicialComplex& K, const Shelling& order,
                       const VertexLabel& v) {
  std::string why;
  if (!verify_shelling(K, order, &why))
    throw std::invalid_argument("input is not a shelling: " + why);
  if (!K.has_vertex(v)) throw std::invalid_argument("vertex not in complex: '" + v + "'");
  auto [up, down] = suspension_copy_labels(K, v);

  Shelling lifted;
  for (const auto& f : order) {
    if (f.contains(v)) {
      lifted.push_back(f.without(v).with(up).with(down));
    } else {
      lifted.push_back(f.with(up));
      lifted.push_back(f.with(down));
    }
  }
  SimplicialComplex susp = one_point_suspension(K, v);
  if (!verify_shelling(susp, lifted, &why))
    throw std::logic_error("lifted order failed verification: " + why);
  return lifted;
}

Shelling project_shelling(const Shelling& suspended, const VertexLabel& v,
                          const VertexLabel& upper, const VertexLabel& lower) {
  Shelling out;
  for (const auto& f : suspended) {
    Simplex image;
    if (f.contains(upper) && f.contains(lower))
      image = f.without(upper).without(lower).with(v);
    else if (f.contains(upper))
      image = f.without(upper);
    else if (f.contains(lower))
      image = f.without(lower);
    else
      image = f;
    if (std::find(out.begin(), out.end(), image) == out.end()) out.push_back(image);
  }
  return out;
}

MorseMatching lift_morse_matching(const SimplicialComplex& K, const MorseMatching& mu,
                                  const VertexLabel& v) {
  auto check = verify_morse_matching(K, mu);
  if (!check.ok) throw std::invalid_argument("input matching invalid: " + check.reason);
  if (!K.has_vertex(v)) throw std::invalid_argument("vertex not in complex: '" + v + "'");
  auto [up, down] = suspension_copy_labels(K, v);

  MorseMatching lifted;
  for (const auto& [lo, hi] : mu.pairs) {
    bool lo_in = lo.contains(v), hi_in = hi.contains(v);
    if (lo_in && hi_in) {
      lifted.pairs.emplace_back(lo.without(v).with(up).with(down),
                                hi.without(v).with(up).with(down));
    } else if (!lo_in && hi_in) {
      // the upper face is lo + v
      lifted.pairs.emplace_back(lo, lo.with(up));
      lifted.pairs.emplace_back(lo.with(down), lo.with(up).with(down));
    } else if (!lo_in && !hi_in) {
      lifted.pairs.emplace_back(lo, hi);
      lifted.pairs.emplace_back(lo.with(up), hi.with(up));
      lifted.pairs.emplace_back(lo.with(down), hi.with(down));
    } else {
      throw std::logic_error("matched pair with vertex only in the lower face");
    }
  }
  SimplicialComplex susp = one_point_suspension(K, v);
  auto lifted_check = verify_morse_matching(susp, lifted);
  if (!lifted_check.ok)
    throw std::logic_error("lifted matching failed verification: " + lifted_check.reason);
  return lifted;
}

}  // namespace wreath
