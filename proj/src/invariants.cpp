#include "vk/chords.hpp"

#include <sstream>

namespace vk {

namespace {

constexpr auto npos = static_cast<std::size_t>(-1);

auto key(int c, int d) -> std::pair<int, int> { return c <= d ? std::pair{c, d} : std::pair{d, c}; }

auto square_label(int c, int d) -> std::string { return "a" + std::to_string(c) + "xa" + std::to_string(d); }

} // namespace

auto DerivativeData::at(int c, int d) const -> Integer {
  const auto it = values.find(key(c, d));
  return it == values.end() ? Integer(0) : it->second;
}

void DerivativeData::set(int c, int d, const Integer& v) {
  if (c < 0 || d < 0 || c >= arcs || d >= arcs) throw std::out_of_range("arc index out of range");
  if (v == 0)
    values.erase(key(c, d));
  else
    values[key(c, d)] = v;
}

auto DerivativeData::operator+(const DerivativeData& o) const -> DerivativeData {
  if (arcs != o.arcs) throw std::invalid_argument("derivative data on different diagrams");
  DerivativeData out = *this;
  for (const auto& [k, v] : o.values) out.set(k.first, k.second, out.at(k.first, k.second) + v);
  return out;
}

auto parse_derivative(const std::string& text, int arcs) -> DerivativeData {
  DerivativeData v;
  v.arcs = arcs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok.size() != 3) throw std::invalid_argument("expected 'C D value'");
      std::size_t used = 0;
      const int c = std::stoi(tok[0], &used);
      if (used != tok[0].size()) throw std::invalid_argument("bad arc");
      const int d = std::stoi(tok[1], &used);
      if (used != tok[1].size()) throw std::invalid_argument("bad arc");
      const Integer value(tok[2]);
      if (v.values.count(key(c, d))) throw std::invalid_argument("pair given twice");
      v.set(c, d, value);
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return v;
}

auto format_derivative(const DerivativeData& v) -> std::string {
  std::string out;
  for (const auto& [k, x] : v.values)
    out += std::to_string(k.first) + " " + std::to_string(k.second) + " " + x.get_str() + "\n";
  return out;
}

RelationViolation::RelationViolation(std::string k, std::string w)
    : std::runtime_error(k + " relation fails at " + w), kind(std::move(k)), witness(std::move(w)) {}

auto validate_derivative(const ChordDiagram& d, const DerivativeData& v) -> TwistedClass {
  const int arcs = d.arcs();
  if (v.arcs != arcs) throw std::invalid_argument("derivative data has the wrong number of arcs");
  for (const auto& [k, x] : v.values)
    if (k.first == k.second && x != 0) throw RelationViolation("one-term", square_label(k.first, k.first));
  const auto g = grid_complex(d);
  IntVector z(g.cells.count(2), 0);
  for (int c = 0; c < arcs; ++c)
    for (int e = 0; e < arcs; ++e)
      if (c != e) z[g.square[static_cast<std::size_t>(c * arcs + e)]] = v.at(c, e);
  const auto bz = g.cells.d(2).apply(z);
  for (std::size_t i = 0; i < bz.size(); ++i)
    if (bz[i] != 0) throw RelationViolation("four-term", g.cells.labels[1][i]);
  TwistedClass out{Direction::Homology, 2, Parity::Twisted, false, {}};
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e) out.values.push_back(v.at(c, e));
  return out;
}

auto type1_basis(const ChordDiagram& d) -> std::vector<DerivativeData> {
  const int arcs = d.arcs();
  const auto g = grid_complex(d);
  const auto bd = g.cells.d(2);
  std::vector<std::pair<int, int>> unknowns;
  std::vector<IntVector> cols;
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e) {
      unknowns.emplace_back(c, e);
      auto col = bd.column(g.square[static_cast<std::size_t>(c * arcs + e)]);
      const auto other = bd.column(g.square[static_cast<std::size_t>(e * arcs + c)]);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] += other[i];
      cols.push_back(std::move(col));
    }
  std::vector<DerivativeData> out;
  for (const auto& x : integer_kernel(matrix_from_columns(bd.rows(), cols))) {
    DerivativeData v;
    v.arcs = arcs;
    for (std::size_t i = 0; i < x.size(); ++i) v.set(unknowns[i].first, unknowns[i].second, x[i]);
    out.push_back(std::move(v));
  }
  return out;
}

auto lifted_chain(const BlownUpComplex& b, const DerivativeData& v) -> IntVector {
  validate_derivative(b.diagram, v);
  const int arcs = b.diagram.arcs();
  const auto& cells = b.complex.cells();
  IntVector z(cells.count(2), 0);
  for (int c = 0; c < arcs; ++c)
    for (int e = 0; e < arcs; ++e)
      if (c != e) z[b.square[static_cast<std::size_t>(c * arcs + e)]] = v.at(c, e);
  const auto bd = cells.d(2);
  auto r = bd.apply(z);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0 && !b.nu[1][i]) throw std::logic_error("proper transform has boundary off the cubes");
    r[i] = -r[i];
  }
  const auto faces = bd.select_columns(b.faces);
  if (rank(faces) != b.faces.size()) throw std::logic_error("cube face correction is not unique");
  const auto x = solve_integer(faces, r);
  if (!x) throw std::logic_error("no cube face correction closes the proper transform");
  for (std::size_t i = 0; i < b.faces.size(); ++i) z[b.faces[i]] = (*x)[i];
  return z;
}

auto lift_cycle(const BlownUpComplex& b, const DerivativeData& v) -> TwistedClass {
  const auto z = lifted_chain(b, v);
  TwistedClass out{Direction::Homology, 2, Parity::Twisted, false, b.complex.restrict(2, z)};
  if (b.complex.extend(2, out.values, Parity::Twisted) != z) throw std::logic_error("lifted cycle is not skew-invariant");
  return out;
}

auto arrow_formula_obstruction(const BlownUpComplex& b, const DerivativeData& v) -> TwistedClass {
  return smith_connecting_homology(b.complex, lift_cycle(b, v));
}

auto integral_arrow_formula(const BlownUpComplex& b, const DerivativeData& v) -> std::optional<ArrowFormula> {
  const auto y = lift_cycle(b, v);
  const auto& e = b.complex;
  const std::size_t n2 = e.cells().count(2);
  std::vector<Triplet> proj;
  for (std::size_t c = 0; c < n2; ++c) {
    const auto [k, w] = e.orbit_of(2, c, Parity::Twisted);
    proj.push_back(Triplet{k, c, Integer(w)});
  }
  const auto bd = e.cells().d(2);
  const auto system = bd.vconcat(IntMatrix::from_triplets(e.orbit_count(2), n2, proj));
  IntVector rhs(bd.rows(), 0);
  rhs.insert(rhs.end(), y.values.begin(), y.values.end());
  const auto c = solve_integer(system, rhs);
  const bool obstructed = !is_trivial(e, smith_connecting_homology(e, y));
  if (c.has_value() == obstructed) throw std::logic_error("formula solve disagrees with the connecting map");
  if (!c) return std::nullopt;
  const int arcs = b.diagram.arcs();
  ArrowFormula f;
  f.arcs = arcs;
  f.coefficient.assign(static_cast<std::size_t>(arcs * arcs), 0);
  for (std::size_t i = 0; i < b.square.size(); ++i)
    if (b.square[i] != npos) f.coefficient[i] = (*c)[b.square[i]];
  return f;
}

auto half_integer_formula(const ChordDiagram& d, const DerivativeData& v) -> ArrowFormula {
  validate_derivative(d, v);
  const int arcs = d.arcs();
  ArrowFormula f;
  f.arcs = arcs;
  f.doubled = true;
  f.coefficient.assign(static_cast<std::size_t>(arcs * arcs), 0);
  for (int c = 0; c < arcs; ++c)
    for (int e = 0; e < arcs; ++e)
      if (c != e) f.coefficient[static_cast<std::size_t>(c * arcs + e)] = v.at(c, e);
  return f;
}

auto propto(const BlownUpComplex& b, const DerivativeData& v) -> int {
  const auto& e = b.complex;
  if (!(twisted_homology(e, 0, Parity::Twisted) == AbelianGroup{0, {Integer(2)}}))
    throw std::logic_error("twisted H_0 of the quotient is not Z/2");
  const auto c = smith_connecting_homology(e, smith_connecting_homology(e, lift_cycle(b, v)));
  return is_trivial(e, c) ? 0 : 1;
}

auto v_ab_derivative(const ChordDiagram& d, const Trail& a, const Trail& b) -> DerivativeData {
  const int arcs = d.arcs();
  for (int c = 0; c < arcs; ++c)
    if (a.direction(c) != 0 && b.direction(c) != 0) throw std::invalid_argument("trails share arc " + std::to_string(c));
  DerivativeData v;
  v.arcs = arcs;
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e)
      v.set(c, e, Integer(a.direction(c) * b.direction(e) + b.direction(c) * a.direction(e)));
  return v;
}

auto gamma1_rank(const BlownUpComplex& b) -> std::size_t {
  return twisted_cohomology(b.complex, 2, Parity::Twisted).free_rank;
}

auto skew_h2_rank(const ChordDiagram& d) -> std::size_t {
  const auto m = involution_on_homology(grid_complex(d).cells, 2);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.rank; ++j) {
    auto col = m.action.column(j);
    col[j] += 1;
    cols.push_back(std::move(col));
  }
  return m.rank - rank(matrix_from_columns(m.rank, cols));
}

auto h1_structure(const BlownUpComplex& b) -> H1Report {
  H1Report r;
  const auto& e = b.complex;
  const auto& q = e.quotient(Parity::Untwisted);
  r.h1 = homology(q, 1);
  const EquivariantComplex rel(e.cells().relative(b.nu));
  r.relative_h1 = homology(rel.quotient(Parity::Untwisted), 1);

  std::vector<std::size_t> nu_edges;
  for (std::size_t k = 0; k < e.orbit_count(1); ++k)
    if (b.nu[1][e.reps(1)[k]]) nu_edges.push_back(k);
  std::vector<IntVector> cycles;
  for (const auto& x : integer_kernel(q.d(1).select_columns(nu_edges))) {
    IntVector full(e.orbit_count(1), 0);
    for (std::size_t i = 0; i < x.size(); ++i) full[nu_edges[i]] = x[i];
    cycles.push_back(std::move(full));
  }
  const auto zmat = matrix_from_columns(e.orbit_count(1), cycles);
  std::vector<IntVector> relations;
  for (auto x : integer_kernel(zmat.hconcat(q.d(2)))) {
    x.resize(cycles.size());
    relations.push_back(std::move(x));
  }
  r.kernel = cokernel(matrix_from_columns(cycles.size(), relations));
  r.kernel_mod_odd = r.kernel.two_primary();

  r.relative_cap_vanishes = true;
  for (const auto& g : integer_kernel(rel.quotient(Parity::Twisted).d(2))) {
    const TwistedClass z{Direction::Homology, 2, Parity::Twisted, false, g};
    if (!is_trivial(rel, smith_connecting_homology(rel, z))) r.relative_cap_vanishes = false;
  }
  return r;
}

} // namespace vk
