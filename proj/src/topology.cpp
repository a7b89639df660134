#include "wreath/topology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wreath {

// --- boundary matrices --------------------------------------------------------

namespace {

// faces grouped by dimension, each level canonically sorted
std::vector<std::vector<FaceBits>> face_levels(const SimplicialComplex& K) {
  auto faces = K.all_faces();
  std::vector<std::vector<FaceBits>> levels(K.dimension() + 1);
  for (const auto& f : *faces) levels[f.count() - 1].push_back(f);
  return levels;  // all_faces already orders by (dim, lex)
}

}  // namespace

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K) {
  if (K.is_void() || K.vertex_count() == 0)
    throw std::invalid_argument("boundary matrices need at least one vertex");
  auto levels = face_levels(K);
  const int D = static_cast<int>(levels.size()) - 1;

  std::vector<BoundaryMatrix> out;
  for (int d = 0; d <= D; ++d) {
    BoundaryMatrix m;
    m.dim = d;
    m.cols = levels[d].size();
    m.columns.resize(m.cols);
    if (d == 0) {
      m.rows = 1;  // augmentation onto the empty face
      for (std::size_t c = 0; c < m.cols; ++c) m.columns[c].push_back({0, 1});
    } else {
      m.rows = levels[d - 1].size();
      std::unordered_map<FaceBits, std::size_t, FaceBitsHash> row_index;
      for (std::size_t r = 0; r < levels[d - 1].size(); ++r) row_index[levels[d - 1][r]] = r;
      for (std::size_t c = 0; c < m.cols; ++c) {
        const FaceBits& face = levels[d][c];
        int pos = 0;
        face.for_each([&](int v) {
          FaceBits sub = face;
          sub.reset(v);
          m.columns[c].push_back({row_index.at(sub), (pos % 2 == 0) ? 1 : -1});
          ++pos;
        });
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// --- Smith normal form ----------------------------------------------------------

SmithNormalForm smith_normal_form(std::vector<std::vector<Int>> m) {
  SmithNormalForm out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t R = m.size(), C = m[0].size();

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < R; ++i) std::swap(m[i][a], m[i][b]);
  };

  std::size_t t = 0;
  while (t < R && t < C) {
    // minimal-absolute-value pivot in the remaining submatrix
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m[i][j] != 0) {
          Int a = abs(m[i][j]);
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (!found) break;
    std::swap(m[t], m[pi]);
    if (pj != t) swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < R && !again; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder is a smaller pivot
          std::swap(m[i], m[t]);
          again = true;
        }
      }
      if (again) continue;
      for (std::size_t j = t + 1; j < C && !again; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // pivot must divide the remaining submatrix for the invariant chain
      for (std::size_t i = t + 1; i < R && !again; ++i)
        for (std::size_t j = t + 1; j < C && !again; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < C; ++jj) m[t][jj] += m[i][jj];
            again = true;
          }
    }
    if (m[t][t] < 0)
      for (std::size_t j = t; j < C; ++j) m[t][j] = -m[t][j];
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(m[i][i]);
  return out;
}

// --- homology -------------------------------------------------------------------

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (betti == 1)
    s = "Z";
  else if (betti > 1)
    s = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s;
}

std::string HomologyGroups::to_string() const {
  std::string s;
  for (int i = 0; i <= top_dim(); ++i)
    s += "H~_" + std::to_string(i) + " = " + groups[i].to_string() + "\n";
  return s;
}

HomologyGroups reduced_homology(const SimplicialComplex& K) {
  if (K.is_void() || K.vertex_count() == 0)
    throw std::invalid_argument("reduced homology needs at least one vertex");
  auto mats = boundary_matrices(K);
  const int D = static_cast<int>(mats.size()) - 1;

  std::vector<SmithNormalForm> snf(D + 1);
  for (int d = 0; d <= D; ++d) {
    std::vector<std::vector<Int>> dense(mats[d].rows, std::vector<Int>(mats[d].cols, 0));
    for (std::size_t c = 0; c < mats[d].cols; ++c)
      for (auto [r, s] : mats[d].columns[c]) dense[r][c] = s;
    snf[d] = smith_normal_form(std::move(dense));
  }

  HomologyGroups out;
  out.groups.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    long faces_d = static_cast<long>(mats[d].cols);
    long rank_d = static_cast<long>(snf[d].rank());
    long rank_up = d < D ? static_cast<long>(snf[d + 1].rank()) : 0;
    out.groups[d].betti = faces_d - rank_d - rank_up;
    if (d < D)
      for (const auto& e : snf[d + 1].diagonal)
        if (e > 1) out.groups[d].torsion.push_back(e);
  }
  return out;
}

bool is_z_acyclic(const SimplicialComplex& K) {
  if (K.is_void()) throw std::invalid_argument("acyclicity of the void complex");
  if (K.vertex_count() == 0) return false;  // {()} has reduced homology Z in dim -1
  auto h = reduced_homology(K);
  for (const auto& g : h.groups)
    if (!g.is_zero()) return false;
  return true;
}

bool homology_equals_shifted(const HomologyGroups& suspended, const HomologyGroups& base) {
  for (int i = 0; i <= std::max(suspended.top_dim(), base.top_dim() + 1); ++i) {
    HomologyGroup expect = (i == 0) ? HomologyGroup{} : base.at(i - 1);
    if (!(suspended.at(i) == expect)) return false;
  }
  return true;
}

// --- pseudomanifold / neighborliness ---------------------------------------------

const char* to_string(Pseudomanifold p) {
  switch (p) {
    case Pseudomanifold::closed: return "closed";
    case Pseudomanifold::with_boundary: return "with-boundary";
    default: return "neither";
  }
}

Pseudomanifold is_pseudomanifold(const SimplicialComplex& K) {
  if (K.is_void()) throw std::invalid_argument("pseudomanifold check on the void complex");
  if (!is_pure(K)) throw std::invalid_argument("pseudomanifold check needs a pure complex");
  std::unordered_map<FaceBits, int, FaceBitsHash> ridge_count;
  for (const auto& f : K.facet_bits())
    f.for_each([&](int v) {
      FaceBits r = f;
      r.reset(v);
      ridge_count[r]++;
    });
  bool any_one = false;
  for (const auto& [r, c] : ridge_count) {
    if (c > 2) return Pseudomanifold::neither;
    if (c == 1) any_one = true;
  }
  return any_one ? Pseudomanifold::with_boundary : Pseudomanifold::closed;
}

int neighborliness(const SimplicialComplex& K) {
  if (K.is_void() || K.vertex_count() == 0)
    throw std::invalid_argument("neighborliness needs at least one vertex");
  int k = 1;
  while (k <= K.vertex_count() && K.is_k_neighborly(k)) ++k;
  return k - 1;
}

bool neighborly_wreath_parameter_check(int e, int n, int d) {
  if (d < 1) throw std::invalid_argument("parameter check needs d >= 1");
  if (n < e + 2) throw std::invalid_argument("parameter check needs n >= e+2");
  if ((e - 1) % 2 == 0) return false;  // e-1 must be odd
  if (n == e + 2) return true;
  if (n == e + 3) return d == 1;
  return false;
}

Verdict is_cohen_macaulay_Q(const SimplicialComplex& K, std::size_t max_faces) {
  Verdict v;
  if (K.is_void() || K.vertex_count() == 0)
    throw std::invalid_argument("Cohen-Macaulay check needs at least one vertex");
  auto faces = K.all_faces(max_faces);
  if (!faces) {
    v.status = Status::unknown;
    v.certificate = "face enumeration exceeded cap";
    return v;
  }
  std::vector<Simplex> to_check{Simplex{}};
  for (const auto& f : *faces) to_check.push_back(K.to_simplex(f));

  for (const auto& g : to_check) {
    ++v.nodes_explored;
    SimplicialComplex l = link_of_face(K, g);
    if (l.vertex_count() == 0) continue;  // link is {()}: nothing below its dimension
    auto h = reduced_homology(l);
    for (int i = 0; i < l.dimension(); ++i)
      if (h.at(i).betti != 0) {
        v.status = Status::fails;
        std::ostringstream os;
        os << "link of {" << g.to_string() << "} has rational H~_" << i << " of rank "
           << h.at(i).betti;
        v.certificate = os.str();
        return v;
      }
  }
  v.status = Status::holds;
  v.certificate = "all face links acyclic below their dimension";
  return v;
}

// --- dual graph -----------------------------------------------------------------

DualGraph dual_graph(const SimplicialComplex& K) {
  if (K.is_void()) throw std::invalid_argument("dual graph of the void complex");
  if (!is_pure(K)) throw std::invalid_argument("dual graph needs a pure complex");
  DualGraph g;
  g.facets = K.facets();
  const auto& bits = K.facet_bits();
  const int e = K.dimension() + 1;
  g.adj.resize(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    for (std::size_t j = i + 1; j < bits.size(); ++j)
      if ((bits[i] & bits[j]).count() == e - 1) {
        g.adj[i].push_back(static_cast<int>(j));
        g.adj[j].push_back(static_cast<int>(i));
      }
  return g;
}

namespace {

// eccentricities via BFS; -1 marks unreachable
std::vector<int> bfs_dist(const DualGraph& g, int src) {
  std::vector<int> dist(g.adj.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<int> dual_diameter(const SimplicialComplex& K) {
  DualGraph g = dual_graph(K);
  if (g.facets.empty()) return std::nullopt;
  int diam = 0;
  for (std::size_t s = 0; s < g.adj.size(); ++s) {
    auto dist = bfs_dist(g, static_cast<int>(s));
    for (int d : dist) {
      if (d < 0) return std::nullopt;  // disconnected
      diam = std::max(diam, d);
    }
  }
  return diam;
}

std::optional<int> hirsch_gap(const SimplicialComplex& K) {
  auto diam = dual_diameter(K);
  if (!diam) return std::nullopt;
  int e = K.dimension() + 1;
  return (K.vertex_count() - e) - *diam;
}

namespace {

int facet_index_of(const SimplicialComplex& K, const Simplex& f) {
  auto bits = K.to_bits(f);
  if (bits)
    for (std::size_t i = 0; i < K.facet_count(); ++i)
      if (K.facet_bits()[i] == *bits) return static_cast<int>(i);
  throw std::invalid_argument("not a facet of the complex: '" + f.to_string() + "'");
}

}  // namespace

std::optional<FacetPath> facet_distance(const SimplicialComplex& K, const Simplex& from,
                                        const Simplex& to) {
  DualGraph g = dual_graph(K);
  int s = facet_index_of(K, from), t = facet_index_of(K, to);
  std::vector<int> parent(g.adj.size(), -2);
  std::deque<int> q{s};
  parent[s] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == t) break;
    for (int w : g.adj[u])
      if (parent[w] == -2) {
        parent[w] = u;
        q.push_back(w);
      }
  }
  if (parent[t] == -2) return std::nullopt;
  FacetPath out;
  for (int u = t; u != -1; u = parent[u]) out.path.push_back(g.facets[u]);
  std::reverse(out.path.begin(), out.path.end());
  out.distance = static_cast<int>(out.path.size()) - 1;
  return out;
}

const char* to_string(PathReport r) {
  switch (r) {
    case PathReport::non_revisiting_found: return "non-revisiting-path-found";
    case PathReport::all_revisit: return "all-paths-revisit";
    default: return "unknown";
  }
}

namespace {

// A vertex revisits when it drops out of the running facet and shows up in a
// later one.
bool path_revisits(const SimplicialComplex& K, const std::vector<int>& path) {
  const auto& bits = K.facet_bits();
  FaceBits left;
  for (std::size_t step = 1; step < path.size(); ++step) {
    const FaceBits& prev = bits[path[step - 1]];
    const FaceBits& cur = bits[path[step]];
    if (cur.intersects(left)) return true;
    left = left | (prev - cur);
  }
  return false;
}

}  // namespace

RevisitingPathReport revisiting_path_report(const SimplicialComplex& K, const Simplex& from,
                                            const Simplex& to, int max_length,
                                            std::uint64_t budget) {
  RevisitingPathReport out;
  DualGraph g = dual_graph(K);
  int s = facet_index_of(K, from), t = facet_index_of(K, to);
  if (max_length < 0) {
    auto diam = dual_diameter(K);
    max_length = (diam ? *diam : static_cast<int>(g.adj.size()) - 1) + 4;
  }
  out.max_length = max_length;

  std::vector<int> path{s};
  std::vector<bool> on_path(g.adj.size(), false);
  on_path[s] = true;
  std::uint64_t spent = 0;
  bool truncated = false;

  auto dfs = [&](auto&& self, int u) -> bool {  // true = witness found
    if (++spent > budget) {
      truncated = true;
      return false;
    }
    if (u == t) {
      ++out.paths_examined;
      if (!path_revisits(K, path)) {
        for (int i : path) out.witness.push_back(g.facets[i]);
        return true;
      }
      return false;
    }
    if (static_cast<int>(path.size()) > max_length) return false;
    for (int w : g.adj[u]) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      bool hit = self(self, w);
      on_path[w] = false;
      path.pop_back();
      if (hit || truncated) return hit;
    }
    return false;
  };

  if (dfs(dfs, s)) {
    out.status = PathReport::non_revisiting_found;
  } else if (truncated) {
    out.status = PathReport::unknown;
  } else {
    out.status = PathReport::all_revisit;
  }
  return out;
}

}  // namespace wreath
