#include "vk/obstructions.hpp"

#include <random>
#include <set>
#include <sstream>

namespace vk {

namespace {

using Point2 = std::array<Rational, 2>;
using Point3 = std::array<Rational, 3>;

auto sgn(const Rational& q) -> int { return sgn(q.get_num()); }

auto cross(const Point2& a, const Point2& b) -> Rational { return a[0] * b[1] - a[1] * b[0]; }
auto sub(const Point2& a, const Point2& b) -> Point2 { return {a[0] - b[0], a[1] - b[1]}; }
auto sub(const Point3& a, const Point3& b) -> Point3 { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

auto det3(const Point3& a, const Point3& b, const Point3& c) -> Rational {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

struct Hit {
  bool touches = false;  // segments share a point
  bool interior = false; // ... strictly inside both
  bool overlap = false;  // collinear with a common segment
  Rational s;            // parameter along the first segment
  Rational t;            // parameter along the second segment
};

// Intersection of segments p0p1 and q0q1 in the plane.
auto intersect(const Point2& p0, const Point2& p1, const Point2& q0, const Point2& q1) -> Hit {
  Hit h;
  const Point2 r = sub(p1, p0);
  const Point2 s = sub(q1, q0);
  const Rational denom = cross(r, s);
  const Point2 qp = sub(q0, p0);
  if (denom == 0) {
    if (cross(qp, r) != 0) return h;
    // Collinear: compare projections onto r (or s if r is degenerate).
    const Point2 axis = (r[0] != 0 || r[1] != 0) ? r : s;
    auto along = [&](const Point2& x) { return x[0] * axis[0] + x[1] * axis[1]; };
    Rational a0 = along(p0), a1 = along(p1), b0 = along(q0), b1 = along(q1);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Rational lo = std::max(a0, b0);
    const Rational hi = std::min(a1, b1);
    if (lo <= hi) {
      h.touches = true;
      h.overlap = lo < hi;
    }
    return h;
  }
  h.s = cross(qp, s) / denom;
  h.t = cross(qp, r) / denom;
  if (h.s < 0 || h.s > 1 || h.t < 0 || h.t > 1) return h;
  h.touches = true;
  h.interior = h.s > 0 && h.s < 1 && h.t > 0 && h.t < 1;
  return h;
}

auto project(const Point3& x, const Projection& d) -> Point2 { return {x[0] - d.a * x[2], x[1] - d.b * x[2]}; }

// Signed crossing counts for every ordered pair of disjoint edges; throws on non-generic projections.
auto crossings(const SpatialGraphEmbedding& g, const Projection& d) -> std::map<std::pair<Simplex, Simplex>, int> {
  const auto& edges = g.graph.simplices(1);
  std::map<std::pair<Simplex, Simplex>, int> out;
  std::set<Point2> points;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      const Point2 p0 = project(g.coords.at(e[0]), d), p1 = project(g.coords.at(e[1]), d);
      const Point2 q0 = project(g.coords.at(f[0]), d), q1 = project(g.coords.at(f[1]), d);
      if (p0 == p1 || q0 == q1) throw DegenerateInput("edge projects to a point");
      const auto h = intersect(p0, p1, q0, q1);
      if (!disjoint(e, f)) {
        if (h.overlap) throw DegenerateInput("adjacent edges project onto each other");
        continue;
      }
      if (!h.touches) continue;
      if (!h.interior) throw DegenerateInput("projected edges meet at a vertex or overlap");
      const Point2 at = {p0[0] + h.s * (p1[0] - p0[0]), p0[1] + h.s * (p1[1] - p0[1])};
      if (!points.insert(at).second) throw DegenerateInput("projection has a triple point");
      const auto& a0 = g.coords.at(e[0]);
      const auto& a1 = g.coords.at(e[1]);
      const auto& b0 = g.coords.at(f[0]);
      const auto& b1 = g.coords.at(f[1]);
      const Rational he = a0[2] + h.s * (a1[2] - a0[2]);
      const Rational hf = b0[2] + h.t * (b1[2] - b0[2]);
      if (he == hf) throw DegenerateInput("disjoint edges meet");
      const int over = he > hf ? 1 : -1;
      const int c = sgn(cross(sub(p1, p0), sub(q1, q0))) * over;
      out[{e, f}] += c;
      out[{f, e}] += c;
    }
  for (const auto& v : g.graph.vertices()) {
    const Point2 pv = project(g.coords.at(v), d);
    for (const auto& e : edges) {
      if (e[0] == v || e[1] == v) continue;
      const Point2 p0 = project(g.coords.at(e[0]), d), p1 = project(g.coords.at(e[1]), d);
      if (intersect(p0, p1, pv, pv).touches) throw DegenerateInput("vertex projects onto an edge");
    }
  }
  return out;
}

auto parse_rational(const std::string& tok) -> Rational {
  Rational q;
  if (q.set_str(tok, 10) != 0) throw ParseError("bad rational '" + tok + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'");
  q.canonicalize();
  return q;
}

auto parse_label(const std::string& tok) -> Vertex {
  std::size_t used = 0;
  Vertex v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("bad vertex label '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError("bad vertex label '" + tok + "'");
  return v;
}

} // namespace

auto parse_embedding(const std::string& text) -> SpatialGraphEmbedding {
  SpatialGraphEmbedding g;
  std::vector<Simplex> facets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
      if (toks.size() == 4) {
        const Vertex v = parse_label(toks[0]);
        if (!g.coords.emplace(v, Point3{parse_rational(toks[1]), parse_rational(toks[2]), parse_rational(toks[3])}).second)
          throw ParseError("duplicate vertex " + toks[0]);
        facets.push_back({v});
      } else if (toks.size() == 2) {
        const Vertex a = parse_label(toks[0]);
        const Vertex b = parse_label(toks[1]);
        if (a == b) throw ParseError("loop at vertex " + toks[0]);
        facets.push_back(make_simplex({a, b}));
      } else {
        throw ParseError("expected 'label x y z' or 'label label'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  g.graph = SimplicialComplex::from_facets(facets);
  for (auto v : g.graph.vertices())
    if (!g.coords.count(v)) throw ParseError("vertex " + std::to_string(v) + " has no coordinates");
  return g;
}

auto format_embedding(const SpatialGraphEmbedding& g) -> std::string {
  std::ostringstream out;
  for (const auto& [v, x] : g.coords) out << v << ' ' << x[0] << ' ' << x[1] << ' ' << x[2] << '\n';
  for (const auto& e : g.graph.simplices(1)) out << e[0] << ' ' << e[1] << '\n';
  return out.str();
}

void check_general_position(const SpatialGraphEmbedding& g) {
  const auto& edges = g.graph.simplices(1);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (!disjoint(e, f)) continue;
      const auto& a0 = g.coords.at(e[0]);
      const auto& a1 = g.coords.at(e[1]);
      const auto& b0 = g.coords.at(f[0]);
      const auto& b1 = g.coords.at(f[1]);
      if (det3(sub(a1, a0), sub(b1, b0), sub(b0, a0)) != 0) continue;
      // Coplanar: drop a coordinate along which the common plane (or line) projects injectively.
      auto cross3 = [](const Point3& u, const Point3& v) {
        return Point3{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      };
      Point3 normal = cross3(sub(a1, a0), sub(b0, a0));
      if (normal == Point3{0, 0, 0}) normal = cross3(sub(a1, a0), sub(b1, a0));
      if (normal == Point3{0, 0, 0}) normal = cross3(sub(a1, a0), Point3{1, 0, 0});
      if (normal == Point3{0, 0, 0}) normal = cross3(sub(a1, a0), Point3{0, 1, 0});
      std::size_t drop = 0;
      while (normal[drop] == 0) ++drop;
      auto keep = [&](const Point3& x) {
        Point2 q;
        std::size_t k = 0;
        for (std::size_t c = 0; c < 3; ++c)
          if (c != drop) q[k++] = x[c];
        return q;
      };
      if (intersect(keep(a0), keep(a1), keep(b0), keep(b1)).touches)
        throw DegenerateInput("edges " + simplex_to_string(e) + " and " + simplex_to_string(f) + " meet");
    }
}

auto gauss_projection_class(const SpatialGraphEmbedding& g, const ProductComplex& p, const Projection& dir)
    -> TwistedClass {
  const auto cr = crossings(g, dir);
  TwistedClass c{Direction::Cohomology, 2, Parity::Twisted, false, {}};
  if (p.complex.top() < 2) return c;
  const auto& cells = p.pairs[2];
  IntVector full(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (auto it = cr.find(cells[i]); it != cr.end()) full[i] = it->second;
  c.values = p.complex.restrict(2, full);
  return c;
}

auto generic_projection(const SpatialGraphEmbedding& g, unsigned seed) -> Projection {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 13);
  Projection d;
  for (int attempt = 0; attempt < 200; ++attempt) {
    try {
      crossings(g, d);
      return d;
    } catch (const DegenerateInput&) {
      d.a = Rational(num(rng), den(rng));
      d.b = Rational(num(rng), den(rng));
      d.a.canonicalize();
      d.b.canonicalize();
    }
  }
  throw DegenerateInput("no generic projection found");
}

auto gauss_projection_class(const SpatialGraphEmbedding& g, unsigned seed) -> TwistedClass {
  check_general_position(g);
  return gauss_projection_class(g, deleted_product(g.graph), generic_projection(g, seed));
}

auto isotopy_obstruction(const SpatialGraphEmbedding& f, const SpatialGraphEmbedding& g, unsigned seed)
    -> ObstructionReport {
  if (!(f.graph == g.graph)) throw std::invalid_argument("embeddings of different graphs");
  check_general_position(f);
  check_general_position(g);
  const auto p = deleted_product(f.graph);
  const auto cf = gauss_projection_class(f, p, generic_projection(f, seed));
  const auto cg = gauss_projection_class(g, p, generic_projection(g, seed));
  ObstructionReport r;
  r.ambient = 3;
  r.klass = cg;
  for (std::size_t i = 0; i < r.klass.values.size(); ++i) r.klass.values[i] -= cf.values[i];
  r.order = class_order(p.complex, r.klass);
  r.trivial = r.order && *r.order == 1;
  r.mod2_trivial = is_trivial(p.complex, reduce_mod2(r.klass));
  r.verdict = r.trivial ? Verdict::Unknown : Verdict::NotIsotopic;
  return r;
}

} // namespace vk
