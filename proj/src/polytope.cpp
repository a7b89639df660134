#include "wreath/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wreath/constructions.hpp"
#include "wreath/generators.hpp"

namespace wreath {

Rat dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<int> GeometricPolytope::vertex_index(const VertexLabel& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

RationalVector GeometricPolytope::vertex_barycenter() const {
  RationalVector b(ambient, 0);
  for (const auto& v : vertices)
    for (int i = 0; i < ambient; ++i) b[i] += v[i];
  for (int i = 0; i < ambient; ++i) b[i] /= static_cast<int>(vertices.size());
  return b;
}

GeometricPolytope translate_to_vertex_barycenter(const GeometricPolytope& P) {
  if (P.vertices.empty()) throw std::invalid_argument("polytope has no vertices");
  GeometricPolytope out = P;
  RationalVector b = P.vertex_barycenter();
  for (auto& v : out.vertices)
    for (int i = 0; i < P.ambient; ++i) v[i] -= b[i];
  out.facets.clear();  // normals are not translation-invariant
  return out;
}

// --- facet-system validation -------------------------------------------------------

namespace {

// -1: sign check violated; 0: exact; 1: strictly positive off-facet
int check_facet_signs(const GeometricPolytope& P, const std::vector<int>& verts,
                      const RationalVector& normal, std::string* why) {
  std::vector<char> on(P.vertices.size(), 0);
  for (int v : verts) on[v] = 1;
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    Rat s = 1 + dot(P.vertices[i], normal);
    if (on[i] && s != 0) {
      if (why)
        *why = "vertex " + P.names[i] + " should lie on the facet but 1+<x,n> = " +
               s.str();
      return -1;
    }
    if (!on[i] && s <= 0) {
      if (why)
        *why = "vertex " + P.names[i] + " violates the facet inequality: 1+<x,n> = " +
               s.str();
      return -1;
    }
  }
  return 0;
}

}  // namespace

Verdict verify_own_facets(const GeometricPolytope& P) {
  std::vector<PredictedFacet> as_predicted;
  for (const auto& f : P.facets) {
    PredictedFacet pf;
    for (int v : f.vertices) pf.vertices.push_back(P.names[v]);
    std::sort(pf.vertices.begin(), pf.vertices.end());
    pf.normal = f.normal;
    as_predicted.push_back(std::move(pf));
  }
  return verify_facet_system(P, as_predicted);
}

Verdict verify_facet_system(const GeometricPolytope& W,
                            const std::vector<PredictedFacet>& predicted) {
  Verdict out;
  if (predicted.empty()) {
    out.status = Status::fails;
    out.certificate = "empty facet system";
    return out;
  }
  for (const auto& pf : predicted) {
    std::vector<int> idx;
    for (const auto& name : pf.vertices) {
      auto i = W.vertex_index(name);
      if (!i) {
        out.status = Status::fails;
        out.certificate = "facet lists unknown vertex '" + name + "'";
        return out;
      }
      idx.push_back(*i);
    }
    if (static_cast<int>(pf.normal.size()) != W.ambient) {
      out.status = Status::fails;
      out.certificate = "normal has wrong dimension";
      return out;
    }
    std::string why;
    if (check_facet_signs(W, idx, pf.normal, &why) != 0) {
      out.status = Status::fails;
      out.certificate = why;
      return out;
    }
    ++out.nodes_explored;
  }

  // ridge counting applies when the system claims to be simplicial
  bool simplicial = true;
  for (const auto& pf : predicted)
    if (static_cast<int>(pf.vertices.size()) != W.ambient) simplicial = false;
  if (simplicial) {
    std::map<std::vector<VertexLabel>, int> ridge_count;
    for (const auto& pf : predicted)
      for (std::size_t omit = 0; omit < pf.vertices.size(); ++omit) {
        std::vector<VertexLabel> r;
        for (std::size_t i = 0; i < pf.vertices.size(); ++i)
          if (i != omit) r.push_back(pf.vertices[i]);
        ridge_count[r]++;
      }
    for (const auto& [r, c] : ridge_count)
      if (c != 2) {
        out.status = Status::fails;
        std::string names;
        for (const auto& n : r) names += n + " ";
        out.certificate = "ridge {" + names + "} lies in " + std::to_string(c) +
                          " predicted facets instead of 2";
        return out;
      }
  }
  out.status = Status::holds;
  out.certificate = simplicial ? "sign conditions and ridge counts verified"
                               : "sign conditions verified";
  return out;
}

// --- dual wedge ---------------------------------------------------------------------

GeometricPolytope dual_wedge(const GeometricPolytope& P, const VertexLabel& v) {
  auto vi = P.vertex_index(v);
  if (!vi) throw std::invalid_argument("vertex not in polytope: '" + v + "'");

  GeometricPolytope out;
  out.ambient = P.ambient + 1;

  // fresh copy names v', v'' (append more apostrophes on a clash)
  std::string primes = "'";
  VertexLabel up, down;
  while (true) {
    up = v + primes;
    down = v + primes + "'";
    bool clash = false;
    for (const auto& n : P.names)
      if (n != v && (n == up || n == down)) clash = true;
    if (!clash) break;
    primes += "'";
  }

  std::map<int, int> old_to_new;
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    if (static_cast<int>(i) == *vi) continue;
    RationalVector x = P.vertices[i];
    x.push_back(0);
    old_to_new[static_cast<int>(i)] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(std::move(x));
    out.names.push_back(P.names[i]);
  }
  RationalVector xu = P.vertices[*vi], xd = P.vertices[*vi];
  xu.push_back(1);
  xd.push_back(-1);
  int up_idx = static_cast<int>(out.vertices.size());
  out.vertices.push_back(std::move(xu));
  out.names.push_back(up);
  int down_idx = static_cast<int>(out.vertices.size());
  out.vertices.push_back(std::move(xd));
  out.names.push_back(down);

  if (P.has_facets()) {
    for (const auto& f : P.facets) {
      bool through_v = std::find(f.vertices.begin(), f.vertices.end(), *vi) !=
                       f.vertices.end();
      if (through_v) {
        PolytopeFacet nf;
        for (int w : f.vertices)
          if (w != *vi) nf.vertices.push_back(old_to_new[w]);
        nf.vertices.push_back(up_idx);
        nf.vertices.push_back(down_idx);
        std::sort(nf.vertices.begin(), nf.vertices.end());
        nf.normal = f.normal;
        nf.normal.push_back(0);
        out.facets.push_back(std::move(nf));
      } else {
        Rat slack = 1 + dot(P.vertices[*vi], f.normal);
        for (int sign : {+1, -1}) {
          PolytopeFacet nf;
          for (int w : f.vertices) nf.vertices.push_back(old_to_new[w]);
          nf.vertices.push_back(sign > 0 ? up_idx : down_idx);
          std::sort(nf.vertices.begin(), nf.vertices.end());
          nf.normal = f.normal;
          nf.normal.push_back(sign > 0 ? -slack : slack);
          out.facets.push_back(std::move(nf));
        }
      }
    }
    Verdict check = verify_own_facets(out);
    if (!check.holds())
      throw std::logic_error("dual wedge facet system failed verification: " +
                             check.certificate);
  }
  return out;
}

// --- wreath product ------------------------------------------------------------------

namespace {

bool is_barycentered(const GeometricPolytope& P) {
  for (const auto& c : P.vertex_barycenter())
    if (c != 0) return false;
  return true;
}

}  // namespace

GeometricPolytope polytope_wreath(const GeometricPolytope& P, const GeometricPolytope& Q,
                                  bool* translated) {
  if (P.vertices.empty() || Q.vertices.empty())
    throw std::invalid_argument("wreath product needs non-empty polytopes");
  GeometricPolytope p = P, q = Q;
  bool moved = false;
  if (!is_barycentered(p)) {
    p = translate_to_vertex_barycenter(p);
    moved = true;
  }
  if (!is_barycentered(q)) {
    q = translate_to_vertex_barycenter(q);
    moved = true;
  }
  if (translated) *translated = moved;

  const int d = p.ambient, e = q.ambient;
  const int n = static_cast<int>(q.vertices.size());
  GeometricPolytope out;
  out.ambient = n * d + e;
  for (int k = 0; k < n; ++k)
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      RationalVector x(out.ambient, 0);
      for (int c = 0; c < d; ++c) x[k * d + c] = p.vertices[i][c];
      for (int c = 0; c < e; ++c) x[n * d + c] = q.vertices[k][c];
      out.vertices.push_back(std::move(x));
      out.names.push_back(p.names[i] + "^" + std::to_string(k + 1));
    }
  return out;
}

std::vector<PredictedFacet> predicted_facets(const GeometricPolytope& P,
                                             const GeometricPolytope& Q) {
  if (!P.has_facets() || !Q.has_facets())
    throw std::invalid_argument("wreath facet prediction needs facet systems on both factors");
  if (!is_barycentered(P) || !is_barycentered(Q))
    throw std::invalid_argument("wreath facet prediction needs vertex-barycentered factors");
  for (const GeometricPolytope* X : {&P, &Q}) {
    Verdict check = verify_own_facets(*X);
    if (!check.holds())
      throw std::invalid_argument("invalid input facet system: " + check.certificate);
  }

  const int d = P.ambient, e = Q.ambient;
  const int n = static_cast<int>(Q.vertices.size());
  const int m = static_cast<int>(P.vertices.size());

  auto wreath_name = [&](int i, int k) {
    return P.names[i] + "^" + std::to_string(k + 1);
  };

  std::vector<PredictedFacet> out;
  for (std::size_t gi = 0; gi < Q.facets.size(); ++gi) {
    const PolytopeFacet& G = Q.facets[gi];
    std::vector<char> in_G(n, 0);
    for (int w : G.vertices) in_G[w] = 1;
    std::vector<int> outside;
    for (int k = 0; k < n; ++k)
      if (!in_G[k]) outside.push_back(k);

    std::vector<std::size_t> choice(outside.size(), 0);
    while (true) {
      PredictedFacet pf;
      pf.q_facet = static_cast<int>(gi);
      // vertices: all of P in blocks over G, the chosen facet of P elsewhere
      for (int k = 0; k < n; ++k) {
        if (in_G[k]) {
          for (int i = 0; i < m; ++i) pf.vertices.push_back(wreath_name(i, k));
        }
      }
      for (std::size_t t = 0; t < outside.size(); ++t) {
        const PolytopeFacet& F = P.facets[choice[t]];
        for (int i : F.vertices) pf.vertices.push_back(wreath_name(i, outside[t]));
        pf.p_choice.push_back(static_cast<int>(choice[t]));
      }
      std::sort(pf.vertices.begin(), pf.vertices.end());
      // normal: sum over k outside G of (1+<w_k, g>) (phi_k)^k, then g
      pf.normal.assign(n * d + e, 0);
      for (std::size_t t = 0; t < outside.size(); ++t) {
        int k = outside[t];
        Rat coeff = 1 + dot(Q.vertices[k], G.normal);
        const RationalVector& phi = P.facets[choice[t]].normal;
        for (int c = 0; c < d; ++c) pf.normal[k * d + c] = coeff * phi[c];
      }
      for (int c = 0; c < e; ++c) pf.normal[n * d + c] = G.normal[c];
      out.push_back(std::move(pf));

      // odometer over facet choices
      std::size_t pos = 0;
      while (pos < choice.size() && ++choice[pos] == P.facets.size()) {
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
  }
  return out;
}

std::vector<ProjectionEntry> projection_pi(const GeometricPolytope& P,
                                           const GeometricPolytope& Q) {
  std::vector<ProjectionEntry> out;
  for (std::size_t k = 0; k < Q.vertices.size(); ++k)
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
      out.push_back({P.names[i] + "^" + std::to_string(k + 1), P.names[i], Q.names[k]});
  return out;
}

std::vector<VertexLabel> blocking_beta(const PredictedFacet& f, const GeometricPolytope& Q) {
  if (f.q_facet < 0 || f.q_facet >= static_cast<int>(Q.facets.size()))
    throw std::invalid_argument("predicted facet does not reference a facet of Q");
  std::vector<VertexLabel> out;
  for (int w : Q.facets[f.q_facet].vertices) out.push_back(Q.names[w]);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex boundary_complex(const GeometricPolytope& P) {
  if (!P.has_facets()) throw std::invalid_argument("polytope has no facet system");
  std::vector<Simplex> facets;
  for (const auto& f : P.facets) {
    std::vector<VertexLabel> names;
    for (int v : f.vertices) names.push_back(P.names[v]);
    facets.push_back(Simplex(std::move(names)));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex boundary_complex(const GeometricPolytope& W,
                                   const std::vector<PredictedFacet>& predicted) {
  (void)W;
  std::vector<Simplex> facets;
  for (const auto& f : predicted) facets.push_back(Simplex(f.vertices));
  return SimplicialComplex::from_facets(facets);
}

Verdict wreath_equals_iterated_dual_wedge(int d, const GeometricPolytope& Q) {
  Verdict out;
  if (d < 1) throw std::invalid_argument("needs d >= 1");
  GeometricPolytope P = simplex_polytope(d);
  auto predicted = predicted_facets(P, Q);

  GeometricPolytope W = polytope_wreath(P, Q);
  Verdict system = verify_facet_system(W, predicted);
  if (!system.holds()) {
    out.status = Status::fails;
    out.certificate = "predicted wreath facet system invalid: " + system.certificate;
    return out;
  }
  SimplicialComplex lhs = boundary_complex(W, predicted);

  // iterated dual wedge, combinatorially: d suspensions at every vertex of Q
  SimplicialComplex rhs = boundary_complex(Q);
  for (auto it = Q.names.rbegin(); it != Q.names.rend(); ++it)
    rhs = reduced_join(d, rhs, *it);

  if (is_isomorphic(lhs, rhs)) {
    out.status = Status::holds;
    out.certificate = "boundary complexes isomorphic";
  } else {
    out.status = Status::fails;
    out.certificate = "boundary complexes differ";
  }
  return out;
}

// --- stock polytopes ------------------------------------------------------------------

GeometricPolytope simplex_polytope(int d) {
  if (d < 0) throw std::invalid_argument("simplex dimension must be >= 0");
  GeometricPolytope P;
  P.ambient = d;
  for (int i = 0; i < d; ++i) {
    RationalVector x(d, 0);
    x[i] = 1;
    P.vertices.push_back(std::move(x));
    P.names.push_back(std::to_string(i + 1));
  }
  P.vertices.push_back(RationalVector(d, -1));
  P.names.push_back(std::to_string(d + 1));

  // facet omitting vertex j <= d: phi_i = -1 (i != j), phi_j = d;
  // facet omitting the last vertex: phi = (-1,...,-1)
  for (int omit = 0; omit <= d; ++omit) {
    PolytopeFacet f;
    for (int i = 0; i <= d; ++i)
      if (i != omit) f.vertices.push_back(i);
    RationalVector phi(d, -1);
    if (omit < d) phi[omit] = d;
    f.normal = std::move(phi);
    P.facets.push_back(std::move(f));
  }
  if (d == 0) P.facets.clear();  // a point has no facets
  return P;
}

GeometricPolytope hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
  GeometricPolytope P;
  P.ambient = d;
  for (int m = 0; m < (1 << d); ++m) {
    RationalVector x(d);
    for (int i = 0; i < d; ++i) x[i] = ((m >> i) & 1) ? 1 : -1;
    P.vertices.push_back(std::move(x));
    P.names.push_back(std::to_string(m + 1));
  }
  for (int i = 0; i < d; ++i)
    for (int side : {+1, -1}) {
      PolytopeFacet f;
      for (int m = 0; m < (1 << d); ++m)
        if ((((m >> i) & 1) ? 1 : -1) == side) f.vertices.push_back(m);
      f.normal.assign(d, 0);
      f.normal[i] = -side;  // 1 - side*x_i >= 0
      P.facets.push_back(std::move(f));
    }
  return P;
}

GeometricPolytope cross_polytope_geom(int d) {
  if (d < 1) throw std::invalid_argument("cross-polytope dimension must be >= 1");
  GeometricPolytope P;
  P.ambient = d;
  for (int i = 0; i < d; ++i)
    for (int sign : {+1, -1}) {
      RationalVector x(d, 0);
      x[i] = sign;
      P.vertices.push_back(std::move(x));
      P.names.push_back(std::to_string(P.names.size() + 1));
    }
  // vertex order: +e_1, -e_1, +e_2, -e_2, ...
  for (int signs = 0; signs < (1 << d); ++signs) {
    PolytopeFacet f;
    RationalVector g(d);
    for (int i = 0; i < d; ++i) {
      int s = ((signs >> i) & 1) ? -1 : +1;
      f.vertices.push_back(2 * i + (s > 0 ? 0 : 1));
      g[i] = -s;
    }
    f.normal = std::move(g);
    P.facets.push_back(std::move(f));
  }
  return P;
}

GeometricPolytope convex_polygon(const std::vector<std::pair<Rat, Rat>>& points) {
  if (points.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  GeometricPolytope P;
  P.ambient = 2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    P.vertices.push_back({points[i].first, points[i].second});
    P.names.push_back(std::to_string(i + 1));
  }
  P = translate_to_vertex_barycenter(P);

  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    // solve 1 + <a,g> = 0, 1 + <b,g> = 0 for the edge (a,b)
    const RationalVector& a = P.vertices[i];
    const RationalVector& b = P.vertices[j];
    Rat det = a[0] * b[1] - a[1] * b[0];
    if (det == 0)
      throw std::invalid_argument("edge line passes through the origin; polygon not convex "
                                  "around its barycenter");
    PolytopeFacet f;
    f.vertices = {std::min(i, j), std::max(i, j)};
    f.normal = {(a[1] - b[1]) / det, (b[0] - a[0]) / det};
    P.facets.push_back(std::move(f));
  }
  Verdict check = verify_own_facets(P);
  if (!check.holds())
    throw std::invalid_argument("points are not in convex position: " + check.certificate);
  return P;
}

GeometricPolytope pentagon() {
  return convex_polygon({{2, 0}, {1, 2}, {-2, 1}, {-2, -1}, {1, -2}});
}

// --- file format ------------------------------------------------------------------------

namespace {

Rat parse_rat(const std::string& tok) {
  auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(tok));
    Int num(tok.substr(0, slash)), den(tok.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse rational '" + tok + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

GeometricPolytope read_polytope(std::istream& in) {
  GeometricPolytope P;
  std::string line;
  int expect_vertices = -1;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "POLYTOPE") {
      if (!(ls >> P.ambient >> expect_vertices))
        throw std::runtime_error("malformed POLYTOPE header");
    } else if (head == "FACET") {
      PolytopeFacet f;
      std::string tok;
      while (ls >> tok && tok != "|") {
        auto idx = P.vertex_index(tok);
        if (!idx) throw std::runtime_error("FACET references unknown vertex '" + tok + "'");
        f.vertices.push_back(*idx);
      }
      std::sort(f.vertices.begin(), f.vertices.end());
      ls >> tok;  // "normal:"
      if (tok != "normal:") throw std::runtime_error("FACET line missing 'normal:'");
      while (ls >> tok) f.normal.push_back(parse_rat(tok));
      if (static_cast<int>(f.normal.size()) != P.ambient)
        throw std::runtime_error("facet normal has wrong dimension");
      P.facets.push_back(std::move(f));
    } else {
      if (expect_vertices < 0) throw std::runtime_error("vertex line before POLYTOPE header");
      if (head.empty() || head.back() != ':')
        throw std::runtime_error("vertex line must look like 'name: r_1 ... r_dim'");
      VertexLabel name = head.substr(0, head.size() - 1);
      RationalVector x;
      std::string tok;
      while (ls >> tok) x.push_back(parse_rat(tok));
      if (static_cast<int>(x.size()) != P.ambient)
        throw std::runtime_error("vertex '" + name + "' has wrong dimension");
      if (P.vertex_index(name))
        throw std::runtime_error("duplicate vertex name '" + name + "'");
      P.vertices.push_back(std::move(x));
      P.names.push_back(name);
    }
  }
  if (expect_vertices >= 0 && expect_vertices != static_cast<int>(P.vertices.size()))
    throw std::runtime_error("header expects " + std::to_string(expect_vertices) +
                             " vertices, file lists " + std::to_string(P.vertices.size()));
  return P;
}

GeometricPolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_polytope(in);
}

void write_polytope(std::ostream& out, const GeometricPolytope& P) {
  out << "POLYTOPE " << P.ambient << ' ' << P.vertices.size() << '\n';
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    out << P.names[i] << ':';
    for (const auto& c : P.vertices[i]) out << ' ' << rat_str(c);
    out << '\n';
  }
  for (const auto& f : P.facets) {
    out << "FACET";
    for (int v : f.vertices) out << ' ' << P.names[v];
    out << " | normal:";
    for (const auto& c : f.normal) out << ' ' << rat_str(c);
    out << '\n';
  }
}

void write_polytope_file(const std::string& path, const GeometricPolytope& P) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_polytope(out, P);
}

}  // namespace wreath
