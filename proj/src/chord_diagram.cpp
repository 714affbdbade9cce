#include "vk/chords.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace vk {

auto ChordDiagram::arc_end(int arc) const -> int {
  return chord_at[static_cast<std::size_t>((arc + 1) % arcs())];
}

auto ChordDiagram::positions(int chord) const -> std::pair<int, int> {
  for (int p = 0; p < arcs(); ++p)
    if (chord_at[static_cast<std::size_t>(p)] == chord) return {p, partner[static_cast<std::size_t>(p)]};
  throw std::out_of_range("no such chord");
}

auto ChordDiagram::to_string() const -> std::string {
  std::string out;
  for (std::size_t p = 0; p < chord_at.size(); ++p) {
    if (p > 0) out += ' ';
    out += std::to_string(chord_at[p] + 1);
  }
  return out;
}

auto diagram_from_matching(const std::vector<int>& partner) -> ChordDiagram {
  ChordDiagram d;
  d.partner = partner;
  d.chord_at.assign(partner.size(), -1);
  int next = 0;
  for (std::size_t p = 0; p < partner.size(); ++p) {
    const auto q = static_cast<std::size_t>(partner[p]);
    if (q >= partner.size() || q == p || partner[q] != static_cast<int>(p))
      throw std::invalid_argument("not a perfect matching");
    if (d.chord_at[p] < 0) d.chord_at[p] = d.chord_at[q] = next++;
  }
  return d;
}

auto parse_diagram(const std::string& word) -> ChordDiagram {
  std::istringstream in(word);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::map<std::string, std::vector<int>> where;
  for (std::size_t i = 0; i < tokens.size(); ++i) where[tokens[i]].push_back(static_cast<int>(i));
  std::vector<int> partner(tokens.size(), -1);
  for (const auto& [t, ps] : where) {
    if (ps.size() != 2)
      throw ParseError("token '" + t + "' occurs " + std::to_string(ps.size()) + " times, expected 2");
    partner[static_cast<std::size_t>(ps[0])] = ps[1];
    partner[static_cast<std::size_t>(ps[1])] = ps[0];
  }
  if (tokens.empty()) throw ParseError("empty chord diagram");
  return diagram_from_matching(partner);
}

auto all_diagrams(int m) -> std::vector<ChordDiagram> {
  std::vector<ChordDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * m), -1);
  std::function<void()> rec = [&] {
    const auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      out.push_back(diagram_from_matching(partner));
      return;
    }
    const auto p = static_cast<int>(it - partner.begin());
    for (int q = p + 1; q < 2 * m; ++q) {
      if (partner[static_cast<std::size_t>(q)] != -1) continue;
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      rec();
      partner[static_cast<std::size_t>(p)] = partner[static_cast<std::size_t>(q)] = -1;
    }
  };
  if (m > 0) rec();
  return out;
}

auto interlacement(const ChordDiagram& d) -> std::vector<std::pair<int, int>> {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d.chords(); ++i)
    for (int j = i + 1; j < d.chords(); ++j) {
      const auto [a, b] = d.positions(i);
      const auto [c, e] = d.positions(j);
      const bool c_in = a < c && c < b;
      const bool e_in = a < e && e < b;
      if (c_in != e_in) out.emplace_back(i, j);
    }
  return out;
}

auto irreducible_factors(const ChordDiagram& d) -> Factorization {
  std::vector<int> parent(static_cast<std::size_t>(d.chords()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [i, j] : interlacement(d)) parent[static_cast<std::size_t>(find(i))] = find(j);
  Factorization f;
  std::map<int, int> ids;
  for (int i = 0; i < d.chords(); ++i) {
    auto [it, fresh] = ids.emplace(find(i), f.count);
    if (fresh) ++f.count;
    f.component.push_back(it->second);
  }
  return f;
}

auto expected_gamma1_rank(const ChordDiagram& d) -> std::size_t {
  const auto m = static_cast<std::size_t>(d.chords());
  return m * (m - 1) / 2 + static_cast<std::size_t>(irreducible_factors(d).count);
}

auto Trail::direction(int arc) const -> int {
  for (auto [a, s] : steps)
    if (a == arc) return s;
  return 0;
}

namespace {

auto step_start(const ChordDiagram& d, std::pair<int, int> s) -> int {
  return s.second > 0 ? d.arc_start(s.first) : d.arc_end(s.first);
}

auto step_end(const ChordDiagram& d, std::pair<int, int> s) -> int {
  return s.second > 0 ? d.arc_end(s.first) : d.arc_start(s.first);
}

// Half-edges used when leaving and when arriving along a step.
auto leaving(const ChordDiagram& d, std::pair<int, int> s) -> int {
  return s.second > 0 ? half_edge_out(s.first) : half_edge_in((s.first + 1) % d.arcs());
}

auto arriving(const ChordDiagram& d, std::pair<int, int> s) -> int {
  return s.second > 0 ? half_edge_in((s.first + 1) % d.arcs()) : half_edge_out(s.first);
}

auto arc_mask(const Trail& t) -> std::uint64_t {
  std::uint64_t m = 0;
  for (auto [a, s] : t.steps) m |= std::uint64_t{1} << a;
  return m;
}

// For each chord, the pairs of half-edges through which the trail passes it.
auto passes(const ChordDiagram& d, const Trail& t) -> std::map<int, std::vector<std::pair<int, int>>> {
  std::map<int, std::vector<std::pair<int, int>>> out;
  const auto n = t.steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = t.steps[i];
    const auto& next = t.steps[(i + 1) % n];
    out[step_end(d, s)].emplace_back(arriving(d, s), leaving(d, next));
  }
  return out;
}

} // namespace

auto closed_trails(const ChordDiagram& d) -> std::vector<Trail> {
  if (d.arcs() > 64) throw std::invalid_argument("too many arcs");
  std::vector<Trail> out;
  Trail cur;
  std::vector<bool> used(static_cast<std::size_t>(d.arcs()), false);
  int start = 0;
  std::function<void(int, int)> extend = [&](int at, int first) {
    if (at == start) out.push_back(cur);
    for (int e = first + 1; e < d.arcs(); ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      for (int s : {1, -1}) {
        const std::pair<int, int> step{e, s};
        if (step_start(d, step) != at) continue;
        used[static_cast<std::size_t>(e)] = true;
        cur.steps.push_back(step);
        extend(step_end(d, step), first);
        cur.steps.pop_back();
        used[static_cast<std::size_t>(e)] = false;
      }
    }
  };
  for (int e0 = 0; e0 < d.arcs(); ++e0) {
    start = d.arc_start(e0);
    cur.steps = {{e0, 1}};
    used[static_cast<std::size_t>(e0)] = true;
    extend(d.arc_end(e0), e0);
    used[static_cast<std::size_t>(e0)] = false;
  }
  return out;
}

auto transversal_vertices(const ChordDiagram& d, const Trail& a, const Trail& b) -> std::vector<int> {
  const auto pa = passes(d, a);
  const auto pb = passes(d, b);
  std::vector<int> out;
  for (const auto& [w, ps] : pa) {
    if (!pb.count(w)) continue;
    if (ps.size() != 1 || pb.at(w).size() != 1) throw std::invalid_argument("trails share an arc");
    if (strand_of(ps[0].first) == strand_of(ps[0].second)) out.push_back(w);
  }
  return out;
}

auto manturov_pairs(const ChordDiagram& d) -> std::vector<std::pair<Trail, Trail>> {
  const auto trails = closed_trails(d);
  std::vector<std::uint64_t> masks;
  for (const auto& t : trails) masks.push_back(arc_mask(t));
  std::vector<std::pair<Trail, Trail>> out;
  for (std::size_t i = 0; i < trails.size(); ++i)
    for (std::size_t j = i + 1; j < trails.size(); ++j)
      if ((masks[i] & masks[j]) == 0 && transversal_vertices(d, trails[i], trails[j]).size() == 1)
        out.emplace_back(trails[i], trails[j]);
  return out;
}

auto plane_rotation_system(const ChordDiagram& d) -> std::optional<std::vector<bool>> {
  const int m = d.chords();
  const auto darts = static_cast<std::size_t>(2 * d.arcs());
  // The other end of the arc carrying a half-edge.
  auto other = [&](int h) {
    const int p = h / 2;
    return h % 2 == 1 ? half_edge_in((p + 1) % d.arcs()) : half_edge_out((p + d.arcs() - 1) % d.arcs());
  };
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << std::max(m - 1, 0)); ++code) {
    std::vector<bool> mirror(static_cast<std::size_t>(m), false);
    for (int c = 1; c < m; ++c) mirror[static_cast<std::size_t>(c)] = (code >> (c - 1)) & 1U;
    std::vector<int> next(darts);
    for (int c = 0; c < m; ++c) {
      const auto [p, q] = d.positions(c);
      std::array<int, 4> cyc{half_edge_in(p), half_edge_in(q), half_edge_out(p), half_edge_out(q)};
      if (mirror[static_cast<std::size_t>(c)]) std::swap(cyc[1], cyc[3]);
      for (std::size_t i = 0; i < 4; ++i) next[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % 4];
    }
    std::vector<bool> seen(darts, false);
    int faces = 0;
    for (std::size_t h = 0; h < darts; ++h) {
      if (seen[h]) continue;
      ++faces;
      for (auto x = static_cast<int>(h); !seen[static_cast<std::size_t>(x)]; x = next[static_cast<std::size_t>(other(x))])
        seen[static_cast<std::size_t>(x)] = true;
    }
    if (faces == m + 2) return mirror;
  }
  return std::nullopt;
}

} // namespace vk
