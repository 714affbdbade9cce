#include "vk/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace vk {

auto make_simplex(std::vector<Vertex> vs) -> Simplex {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw std::invalid_argument("repeated vertex in simplex");
  return vs;
}

auto disjoint(const Simplex& a, const Simplex& b) -> bool {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

auto is_face(const Simplex& face, const Simplex& s) -> bool {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

auto simplex_to_string(const Simplex& s) -> std::string {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

auto SimplicialComplex::from_facets(const std::vector<Simplex>& facets) -> SimplicialComplex {
  std::set<Simplex> all;
  for (const auto& f0 : facets) {
    const Simplex f = make_simplex(f0);
    if (f.empty()) continue;
    if (f.size() > 20) throw std::invalid_argument("simplex too large");
    const std::size_t n = f.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1U << i)) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  SimplicialComplex k;
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
    k.by_dim_[d].push_back(s);
  }
  for (auto& layer : k.by_dim_) std::sort(layer.begin(), layer.end());
  for (const auto& layer : k.by_dim_)
    for (std::size_t i = 0; i < layer.size(); ++i) k.index_.emplace(layer[i], i);
  return k;
}

auto SimplicialComplex::simplices(int d) const -> const std::vector<Simplex>& {
  static const std::vector<Simplex> none;
  if (d < 0 || d > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(d)];
}

auto SimplicialComplex::index(const Simplex& s) const -> std::optional<std::size_t> {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

auto SimplicialComplex::vertices() const -> std::vector<Vertex> {
  std::vector<Vertex> vs;
  for (const auto& s : simplices(0)) vs.push_back(s.front());
  return vs;
}

auto SimplicialComplex::facets() const -> std::vector<Simplex> {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d)
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& t : simplices(d + 1))
        if (is_face(s, t)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

auto SimplicialComplex::all_simplices() const -> std::vector<Simplex> {
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

auto SimplicialComplex::max_vertex() const -> Vertex {
  const auto vs = vertices();
  return vs.empty() ? 0 : vs.back();
}

auto parse_complex(const std::string& text) -> SimplicialComplex {
  std::istringstream in(text);
  std::string line;
  std::vector<Simplex> facets;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    std::vector<Vertex> vs;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("line " + std::to_string(lineno) + ": bad vertex label '" + tok + "'");
      vs.push_back(v);
    }
    if (vs.empty()) continue;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw ParseError("line " + std::to_string(lineno) + ": repeated vertex");
    facets.push_back(vs);
  }
  return SimplicialComplex::from_facets(facets);
}

auto format_complex(const SimplicialComplex& k) -> std::string {
  std::string out;
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

auto link(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d)) {
      if (!is_face(s, t) || t.size() == s.size()) continue;
      Simplex rest;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
      out.push_back(rest);
    }
  return SimplicialComplex::from_facets(out);
}

auto star(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d))
      if (is_face(s, t)) out.push_back(t);
  return SimplicialComplex::from_facets(out);
}

auto disjoint_complement(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d))
      if (disjoint(s, t)) out.push_back(t);
  return SimplicialComplex::from_facets(out);
}

auto disjoint_complement(const SimplicialComplex& k, const SimplicialComplex& sub) -> SimplicialComplex {
  return disjoint_complement(k, make_simplex(sub.vertices()));
}

auto full_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& vs0) -> SimplicialComplex {
  auto vs = vs0;
  std::sort(vs.begin(), vs.end());
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d))
      if (std::includes(vs.begin(), vs.end(), t.begin(), t.end())) out.push_back(t);
  return SimplicialComplex::from_facets(out);
}

namespace {

// Order complex of the downward closed family of simplices accepted by keep.
auto order_complex(const SimplicialComplex& k, const std::function<bool(const Simplex&)>& keep) -> SimplicialComplex {
  const auto all = k.all_simplices();
  std::map<Simplex, Vertex> label;
  for (std::size_t i = 0; i < all.size(); ++i) label.emplace(all[i], static_cast<Vertex>(i));
  std::map<Simplex, std::vector<Simplex>> cofaces;
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& t : k.simplices(d)) {
      if (!keep(t)) continue;
      for (std::size_t i = 0; i < t.size(); ++i) {
        Simplex f = t;
        f.erase(f.begin() + static_cast<long>(i));
        cofaces[f].push_back(t);
      }
    }
  std::vector<Simplex> facets;
  std::vector<Vertex> chain;
  std::function<void(const Simplex&)> walk = [&](const Simplex& s) {
    chain.push_back(label.at(s));
    auto it = cofaces.find(s);
    if (it == cofaces.end() || it->second.empty()) {
      facets.push_back(chain);
    } else {
      for (const auto& t : it->second) walk(t);
    }
    chain.pop_back();
  };
  for (const auto& v : k.simplices(0))
    if (keep(v)) walk(v);
  return SimplicialComplex::from_facets(facets);
}

} // namespace

auto barycentric_subdivision(const SimplicialComplex& k) -> SimplicialComplex {
  return order_complex(k, [](const Simplex&) { return true; });
}

auto puncture_complement(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex {
  return order_complex(k, [&](const Simplex& t) { return !is_face(s, t); });
}

auto cone(const SimplicialComplex& k, Vertex apex) -> SimplicialComplex {
  if (k.contains({apex})) throw std::invalid_argument("cone apex already a vertex");
  std::vector<Simplex> facets;
  for (auto f : k.facets()) {
    f.push_back(apex);
    facets.push_back(make_simplex(f));
  }
  if (facets.empty()) facets.push_back({apex});
  return SimplicialComplex::from_facets(facets);
}

auto cone(const SimplicialComplex& k) -> SimplicialComplex { return cone(k, k.max_vertex() + 1); }

auto join(const SimplicialComplex& a, const SimplicialComplex& b) -> SimplicialComplex {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  if (!disjoint(va, vb)) throw std::invalid_argument("join needs disjoint vertex sets");
  std::vector<Simplex> facets;
  const auto fa = a.facets();
  const auto fb = b.facets();
  if (fa.empty()) return b;
  if (fb.empty()) return a;
  for (const auto& f : fa)
    for (const auto& g : fb) {
      Simplex s = f;
      s.insert(s.end(), g.begin(), g.end());
      facets.push_back(make_simplex(s));
    }
  return SimplicialComplex::from_facets(facets);
}

auto skeleton(int N, int n) -> SimplicialComplex {
  if (N < 0 || n < 0) throw std::invalid_argument("skeleton needs N, n >= 0");
  n = std::min(n, N);
  std::vector<Simplex> facets;
  Simplex cur;
  std::function<void(Vertex)> rec = [&](Vertex next) {
    if (static_cast<int>(cur.size()) == n + 1) {
      facets.push_back(cur);
      return;
    }
    for (Vertex v = next; v <= N + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return SimplicialComplex::from_facets(facets);
}

auto complex_union(const SimplicialComplex& a, const SimplicialComplex& b) -> SimplicialComplex {
  auto fs = a.facets();
  auto gs = b.facets();
  fs.insert(fs.end(), gs.begin(), gs.end());
  return SimplicialComplex::from_facets(fs);
}

auto complete_graph(int n) -> SimplicialComplex { return skeleton(n - 1, 1); }

auto complete_bipartite(int a, int b) -> SimplicialComplex {
  std::vector<Simplex> edges;
  for (Vertex i = 1; i <= a; ++i)
    for (Vertex j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
  return SimplicialComplex::from_facets(edges);
}

} // namespace vk
