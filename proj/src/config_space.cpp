#include "vk/chords.hpp"

#include <array>

namespace vk {

namespace {

constexpr auto npos = static_cast<std::size_t>(-1);

struct Builder {
  std::vector<std::vector<std::string>> labels{{}, {}, {}};
  std::vector<std::vector<Triplet>> bd{{}, {}, {}};
  std::vector<std::vector<SignedCell>> inv{{}, {}, {}};

  auto add(int d, std::string label) -> std::size_t {
    auto& l = labels[static_cast<std::size_t>(d)];
    l.push_back(std::move(label));
    inv[static_cast<std::size_t>(d)].push_back(SignedCell{npos, 1});
    return l.size() - 1;
  }
  void face(int d, std::size_t cell, std::size_t f, int sign) {
    bd[static_cast<std::size_t>(d)].push_back(Triplet{f, cell, Integer(sign)});
  }
  void pair(int d, std::size_t a, std::size_t b, int sign) {
    inv[static_cast<std::size_t>(d)][a] = SignedCell{b, sign};
    inv[static_cast<std::size_t>(d)][b] = SignedCell{a, sign};
  }
  auto finish() -> CellComplex {
    CellComplex c;
    c.labels = labels;
    c.involution = inv;
    c.boundary.emplace_back(0, labels[0].size());
    for (std::size_t d = 1; d < 3; ++d)
      c.boundary.push_back(IntMatrix::from_triplets(labels[d - 1].size(), labels[d].size(), bd[d]));
    return c;
  }
};

auto arc_name(int c) -> std::string { return "a" + std::to_string(c); }
auto chord_name(int w) -> std::string { return "w" + std::to_string(w + 1); }
auto half_name(int h) -> std::string { return std::to_string(h / 2) + (h % 2 == 1 ? "+" : "-"); }

// Half-edges of an arc at its start (xi = 0) and end (xi = 1), and the chords there.
auto arc_half(const ChordDiagram& d, int c, int xi) -> int {
  return xi == 0 ? half_edge_out(c) : half_edge_in((c + 1) % d.arcs());
}
auto arc_chord(const ChordDiagram& d, int c, int xi) -> int { return xi == 0 ? d.arc_start(c) : d.arc_end(c); }

// Corner of the cube assigned to F(h); S(h) is its antipode.
auto cube_corner(const ChordDiagram& d, int h) -> std::array<int, 3> {
  const int w = d.chord_at[static_cast<std::size_t>(h / 2)];
  const bool first = d.positions(w).first == h / 2;
  const bool in = h % 2 == 0;
  if (first) return in ? std::array<int, 3>{1, 1, 1} : std::array<int, 3>{-1, -1, 1};
  return in ? std::array<int, 3>{1, -1, -1} : std::array<int, 3>{-1, 1, -1};
}

} // namespace

auto grid_complex(const ChordDiagram& d) -> GridComplex {
  const int m = d.chords();
  const int arcs = d.arcs();
  Builder b;
  std::vector<std::size_t> v(static_cast<std::size_t>(m * m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) v[static_cast<std::size_t>(x * m + y)] = b.add(0, "(" + chord_name(x) + "," + chord_name(y) + ")");
  auto vert = [&](int x, int y) { return v[static_cast<std::size_t>(x * m + y)]; };
  std::vector<std::size_t> fe(static_cast<std::size_t>(arcs * m)), se(static_cast<std::size_t>(arcs * m));
  for (int c = 0; c < arcs; ++c)
    for (int y = 0; y < m; ++y) {
      const auto f = b.add(1, arc_name(c) + "x" + chord_name(y));
      const auto s = b.add(1, chord_name(y) + "x" + arc_name(c));
      fe[static_cast<std::size_t>(c * m + y)] = f;
      se[static_cast<std::size_t>(c * m + y)] = s;
      b.face(1, f, vert(d.arc_start(c), y), -1);
      b.face(1, f, vert(d.arc_end(c), y), 1);
      b.face(1, s, vert(y, d.arc_start(c)), -1);
      b.face(1, s, vert(y, d.arc_end(c)), 1);
      b.pair(1, f, s, 1);
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) b.pair(0, vert(x, y), vert(y, x), 1);
  GridComplex g;
  g.square.assign(static_cast<std::size_t>(arcs * arcs), npos);
  for (int c = 0; c < arcs; ++c)
    for (int e = 0; e < arcs; ++e) {
      if (c == e) continue;
      const auto sq = b.add(2, arc_name(c) + "x" + arc_name(e));
      g.square[static_cast<std::size_t>(c * arcs + e)] = sq;
      b.face(2, sq, se[static_cast<std::size_t>(e * m + d.arc_end(c))], 1);
      b.face(2, sq, se[static_cast<std::size_t>(e * m + d.arc_start(c))], -1);
      b.face(2, sq, fe[static_cast<std::size_t>(c * m + d.arc_end(e))], -1);
      b.face(2, sq, fe[static_cast<std::size_t>(c * m + d.arc_start(e))], 1);
    }
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e)
      b.pair(2, g.square[static_cast<std::size_t>(c * arcs + e)], g.square[static_cast<std::size_t>(e * arcs + c)], -1);
  g.cells = b.finish();
  return g;
}

auto build_config_space(const ChordDiagram& d) -> BlownUpComplex {
  const int m = d.chords();
  if (m == 0) throw std::invalid_argument("chord diagram without chords");
  const int arcs = d.arcs();
  const int halves = 2 * arcs;
  Builder b;

  std::vector<std::size_t> gv(static_cast<std::size_t>(m * m), npos);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y) gv[static_cast<std::size_t>(x * m + y)] = b.add(0, "(" + chord_name(x) + "," + chord_name(y) + ")");
  std::vector<std::size_t> fv(static_cast<std::size_t>(halves)), sv(static_cast<std::size_t>(halves));
  for (int h = 0; h < halves; ++h) {
    fv[static_cast<std::size_t>(h)] = b.add(0, "F" + half_name(h));
    sv[static_cast<std::size_t>(h)] = b.add(0, "S" + half_name(h));
    b.pair(0, fv[static_cast<std::size_t>(h)], sv[static_cast<std::size_t>(h)], 1);
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) b.pair(0, gv[static_cast<std::size_t>(x * m + y)], gv[static_cast<std::size_t>(y * m + x)], 1);

  // Endpoint of the grid edge C x y (first = true) or y x C at the xi end of C.
  auto endpoint = [&](bool first, int c, int y, int xi) {
    const int x = arc_chord(d, c, xi);
    if (x == y) return (first ? fv : sv)[static_cast<std::size_t>(arc_half(d, c, xi))];
    return first ? gv[static_cast<std::size_t>(x * m + y)] : gv[static_cast<std::size_t>(y * m + x)];
  };
  std::vector<std::size_t> fe(static_cast<std::size_t>(arcs * m)), se(static_cast<std::size_t>(arcs * m));
  for (int c = 0; c < arcs; ++c)
    for (int y = 0; y < m; ++y) {
      const auto f = b.add(1, arc_name(c) + "x" + chord_name(y));
      const auto s = b.add(1, chord_name(y) + "x" + arc_name(c));
      fe[static_cast<std::size_t>(c * m + y)] = f;
      se[static_cast<std::size_t>(c * m + y)] = s;
      b.face(1, f, endpoint(true, c, y, 0), -1);
      b.face(1, f, endpoint(true, c, y, 1), 1);
      b.face(1, s, endpoint(false, c, y, 0), -1);
      b.face(1, s, endpoint(false, c, y, 1), 1);
      b.pair(1, f, s, 1);
    }

  BlownUpComplex out;
  out.diagram = d;
  std::vector<bool> nu0(b.labels[0].size(), false);
  for (int h = 0; h < halves; ++h) nu0[fv[static_cast<std::size_t>(h)]] = nu0[sv[static_cast<std::size_t>(h)]] = true;

  // Cube edges F(h) -> S(h') for distinct half-edges at one chord.
  std::map<std::pair<int, int>, std::size_t> cube_edge;
  for (int w = 0; w < m; ++w) {
    const auto [p, q] = d.positions(w);
    const std::array<int, 4> hs{half_edge_in(p), half_edge_out(p), half_edge_in(q), half_edge_out(q)};
    for (int hf : hs)
      for (int hs2 : hs) {
        if (hf == hs2) continue;
        const auto e = b.add(1, "F" + half_name(hf) + "S" + half_name(hs2));
        cube_edge[{hf, hs2}] = e;
        b.face(1, e, fv[static_cast<std::size_t>(hf)], -1);
        b.face(1, e, sv[static_cast<std::size_t>(hs2)], 1);
      }
  }
  for (const auto& [key, e] : cube_edge)
    if (key.first < key.second) b.pair(1, e, cube_edge.at({key.second, key.first}), -1);

  // Truncated squares.
  out.square.assign(static_cast<std::size_t>(arcs * arcs), npos);
  for (int c = 0; c < arcs; ++c)
    for (int e = 0; e < arcs; ++e) {
      if (c == e) continue;
      const auto sq = b.add(2, arc_name(c) + "x" + arc_name(e));
      out.square[static_cast<std::size_t>(c * arcs + e)] = sq;
      b.face(2, sq, se[static_cast<std::size_t>(e * m + d.arc_end(c))], 1);
      b.face(2, sq, se[static_cast<std::size_t>(e * m + d.arc_start(c))], -1);
      b.face(2, sq, fe[static_cast<std::size_t>(c * m + d.arc_end(e))], -1);
      b.face(2, sq, fe[static_cast<std::size_t>(c * m + d.arc_start(e))], 1);
      for (int xi = 0; xi < 2; ++xi)
        for (int eta = 0; eta < 2; ++eta)
          if (arc_chord(d, c, xi) == arc_chord(d, e, eta))
            b.face(2, sq, cube_edge.at({arc_half(d, c, xi), arc_half(d, e, eta)}), (xi + eta) % 2 == 0 ? -1 : 1);
    }
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e)
      b.pair(2, out.square[static_cast<std::size_t>(c * arcs + e)], out.square[static_cast<std::size_t>(e * arcs + c)], -1);

  // Vertical faces x = +-1, y = +-1 of each cube, walked around in a fixed pattern.
  for (int w = 0; w < m; ++w) {
    const auto [p, q] = d.positions(w);
    std::map<std::array<int, 3>, std::pair<bool, int>> at;
    for (int h : {half_edge_in(p), half_edge_out(p), half_edge_in(q), half_edge_out(q)}) {
      const auto c = cube_corner(d, h);
      at[c] = {true, h};
      at[{-c[0], -c[1], -c[2]}] = {false, h};
    }
    std::map<std::pair<int, int>, std::size_t> face_of;
    std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, int>>> boundary_of;
    for (int axis = 0; axis < 2; ++axis)
      for (int s : {1, -1}) {
        const auto f = b.add(2, chord_name(w) + (axis == 0 ? "x" : "y") + (s > 0 ? "+" : "-"));
        face_of[{axis, s}] = f;
        out.faces.push_back(f);
        const std::array<std::pair<int, int>, 4> walk{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
        for (std::size_t i = 0; i < 4; ++i) {
          auto corner = [&](std::pair<int, int> uz) {
            std::array<int, 3> c{};
            c[static_cast<std::size_t>(axis)] = s;
            c[static_cast<std::size_t>(1 - axis)] = uz.first;
            c[2] = uz.second;
            return at.at(c);
          };
          const auto from = corner(walk[i]);
          const auto to = corner(walk[(i + 1) % 4]);
          const bool forward = from.first;
          const auto e = forward ? cube_edge.at({from.second, to.second}) : cube_edge.at({to.second, from.second});
          b.face(2, f, e, forward ? 1 : -1);
          boundary_of[{axis, s}].emplace_back(e, forward ? 1 : -1);
        }
      }
    // t(face) = eps * opposite face, with eps read off from the boundaries.
    for (int axis = 0; axis < 2; ++axis) {
      const auto& mine = boundary_of.at({axis, 1});
      const auto& theirs = boundary_of.at({axis, -1});
      std::map<std::size_t, int> image;
      for (auto [e, sgn] : mine) {
        const auto& t = b.inv[1][e];
        image[t.index] += sgn * t.sign;
      }
      int eps = 0;
      for (auto [e, sgn] : theirs) {
        const int ratio = image.at(e) * sgn;
        if (eps != 0 && ratio != eps) throw std::logic_error("cube face involution is not cellular");
        eps = ratio;
      }
      b.pair(2, face_of.at({axis, 1}), face_of.at({axis, -1}), eps);
    }
  }

  auto cells = b.finish();
  if (!cells.involution_commutes_with_boundary()) throw std::logic_error("involution does not commute with the boundary");
  out.nu = {nu0, std::vector<bool>(cells.count(1), false), std::vector<bool>(cells.count(2), false)};
  for (const auto& [key, e] : cube_edge) out.nu[1][e] = true;
  for (auto f : out.faces) out.nu[2][f] = true;
  out.complex = EquivariantComplex(std::move(cells));
  return out;
}

} // namespace vk
