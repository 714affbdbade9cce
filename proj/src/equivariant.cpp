#include "vk/equivariant.hpp"

#include <stdexcept>

namespace vk {

auto flip(Parity p) -> Parity { return p == Parity::Untwisted ? Parity::Twisted : Parity::Untwisted; }

auto power_parity(int k) -> Parity { return k % 2 == 0 ? Parity::Untwisted : Parity::Twisted; }

auto parity_name(Parity p) -> std::string { return p == Parity::Untwisted ? "untwisted" : "twisted"; }

namespace {

auto eps(Parity p) -> int { return p == Parity::Untwisted ? 1 : -1; }

auto mod2(IntVector v) -> IntVector {
  for (auto& x : v) x = mpz_odd_p(x.get_mpz_t()) ? 1 : 0;
  return v;
}

auto is_zero_mod(const IntVector& v, bool m2) -> bool {
  for (const auto& x : v)
    if (m2 ? mpz_odd_p(x.get_mpz_t()) != 0 : x != 0) return false;
  return true;
}

} // namespace

auto CellComplex::count(int d) const -> std::size_t {
  if (d < 0 || d > top()) return 0;
  return labels[static_cast<std::size_t>(d)].size();
}

auto CellComplex::d(int deg) const -> IntMatrix {
  if (deg <= 0 || deg > top()) return IntMatrix(count(deg - 1), count(deg));
  return boundary[static_cast<std::size_t>(deg)];
}

auto CellComplex::chains() const -> ChainComplex {
  ChainComplex c;
  for (int d = 0; d <= top(); ++d) c.ranks.push_back(count(d));
  for (int d = 0; d <= top(); ++d) c.boundary.push_back(this->d(d));
  return c;
}

auto CellComplex::involution_matrix(int d) const -> IntMatrix {
  std::vector<Triplet> ts;
  for (std::size_t c = 0; c < count(d); ++c) {
    const auto& t = involution[static_cast<std::size_t>(d)][c];
    ts.push_back(Triplet{t.index, c, Integer(t.sign)});
  }
  return IntMatrix::from_triplets(count(d), count(d), ts);
}

auto CellComplex::involution_squares_to_identity() const -> bool {
  for (int d = 0; d <= top(); ++d) {
    const auto& inv = involution[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < inv.size(); ++c) {
      const auto& t = inv[c];
      if (t.index >= inv.size()) return false;
      const auto& tt = inv[t.index];
      if (tt.index != c || tt.sign * t.sign != 1) return false;
    }
  }
  return true;
}

auto CellComplex::involution_commutes_with_boundary() const -> bool {
  for (int d = 1; d <= top(); ++d)
    if (!(this->d(d) * involution_matrix(d) == involution_matrix(d - 1) * this->d(d))) return false;
  return true;
}

auto CellComplex::involution_is_free() const -> bool {
  for (int d = 0; d <= top(); ++d) {
    const auto& inv = involution[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < inv.size(); ++c)
      if (inv[c].index == c) return false;
  }
  return true;
}

namespace {

auto reindex(const CellComplex& c, const std::vector<std::vector<bool>>& keep, bool require_closed) -> CellComplex {
  CellComplex out;
  std::vector<std::vector<std::size_t>> pos(keep.size());
  for (int d = 0; d <= c.top(); ++d) {
    const auto& k = keep[static_cast<std::size_t>(d)];
    auto& p = pos[static_cast<std::size_t>(d)];
    p.assign(k.size(), static_cast<std::size_t>(-1));
    out.labels.emplace_back();
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i]) {
        p[i] = out.labels.back().size();
        out.labels.back().push_back(c.labels[static_cast<std::size_t>(d)][i]);
      }
  }
  for (int d = 0; d <= c.top(); ++d) {
    const auto& p = pos[static_cast<std::size_t>(d)];
    std::vector<SignedCell> inv;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == static_cast<std::size_t>(-1)) continue;
      const auto& t = c.involution[static_cast<std::size_t>(d)][i];
      if (p[t.index] == static_cast<std::size_t>(-1)) throw std::invalid_argument("cell set is not invariant");
      inv.push_back(SignedCell{p[t.index], t.sign});
    }
    out.involution.push_back(std::move(inv));
    const std::size_t below = d == 0 ? 0 : out.labels[static_cast<std::size_t>(d - 1)].size();
    if (d == 0) {
      out.boundary.emplace_back(0, out.labels[0].size());
      continue;
    }
    const auto& pb = pos[static_cast<std::size_t>(d - 1)];
    std::vector<Triplet> ts;
    const auto bd = c.d(d);
    for (std::size_t r = 0; r < bd.rows(); ++r)
      for (const auto& e : bd.row(r)) {
        if (p[e.col] == static_cast<std::size_t>(-1)) continue;
        if (pb[r] == static_cast<std::size_t>(-1)) {
          if (require_closed) throw std::invalid_argument("cell set is not a subcomplex");
          continue;
        }
        ts.push_back(Triplet{pb[r], p[e.col], e.value});
      }
    out.boundary.push_back(IntMatrix::from_triplets(below, out.labels[static_cast<std::size_t>(d)].size(), ts));
  }
  return out;
}

} // namespace

auto CellComplex::subcomplex(const std::vector<std::vector<bool>>& keep) const -> CellComplex {
  return reindex(*this, keep, true);
}

auto CellComplex::relative(const std::vector<std::vector<bool>>& sub) const -> CellComplex {
  std::vector<std::vector<bool>> keep = sub;
  for (auto& layer : keep) layer.flip();
  return reindex(*this, keep, false);
}

EquivariantComplex::EquivariantComplex(CellComplex c) : cells_(std::move(c)) {
  std::vector<std::vector<std::size_t>> reps(static_cast<std::size_t>(cells_.top() + 1));
  for (int d = 0; d <= cells_.top(); ++d)
    for (std::size_t i = 0; i < cells_.count(d); ++i)
      if (cells_.involution[static_cast<std::size_t>(d)][i].index > i) reps[static_cast<std::size_t>(d)].push_back(i);
  build(reps);
}

EquivariantComplex::EquivariantComplex(CellComplex c, const std::vector<std::vector<std::size_t>>& reps)
    : cells_(std::move(c)) {
  build(reps);
}

void EquivariantComplex::build(const std::vector<std::vector<std::size_t>>& reps) {
  if (!cells_.involution_is_free()) throw std::invalid_argument("involution is not free");
  if (!cells_.involution_squares_to_identity()) throw std::invalid_argument("involution does not square to the identity");
  reps_ = reps;
  const int top = cells_.top();
  orbit_.assign(static_cast<std::size_t>(top + 1), {});
  rep_sign_.assign(static_cast<std::size_t>(top + 1), {});
  for (int d = 0; d <= top; ++d) {
    const auto ud = static_cast<std::size_t>(d);
    orbit_[ud].assign(cells_.count(d), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < reps_[ud].size(); ++k) {
      const std::size_t r = reps_[ud][k];
      const auto& t = cells_.involution[ud][r];
      if (orbit_[ud][r] != static_cast<std::size_t>(-1) || orbit_[ud][t.index] != static_cast<std::size_t>(-1))
        throw std::invalid_argument("two representatives in one orbit");
      orbit_[ud][r] = k;
      orbit_[ud][t.index] = k;
      rep_sign_[ud].push_back(t.sign);
    }
    for (auto o : orbit_[ud])
      if (o == static_cast<std::size_t>(-1)) throw std::invalid_argument("orbit without representative");
  }
  for (Parity p : {Parity::Untwisted, Parity::Twisted}) {
    ChainComplex q;
    for (int d = 0; d <= top; ++d) q.ranks.push_back(orbit_count(d));
    q.boundary.emplace_back(0, orbit_count(0));
    for (int d = 1; d <= top; ++d) {
      const auto bt = cells_.d(d).transpose();
      std::vector<Triplet> ts;
      const auto& rs = reps_[static_cast<std::size_t>(d)];
      for (std::size_t k = 0; k < rs.size(); ++k)
        for (const auto& e : bt.row(rs[k])) {
          auto [pos, w] = orbit_of(d - 1, e.col, p);
          ts.push_back(Triplet{pos, k, e.value * w});
        }
      q.boundary.push_back(IntMatrix::from_triplets(orbit_count(d - 1), orbit_count(d), ts));
    }
    quotient_[p == Parity::Untwisted ? 0 : 1] = std::move(q);
  }
}

auto EquivariantComplex::orbit_count(int d) const -> std::size_t {
  if (d < 0 || d > top()) return 0;
  return reps_[static_cast<std::size_t>(d)].size();
}

auto EquivariantComplex::reps(int d) const -> const std::vector<std::size_t>& {
  static const std::vector<std::size_t> none;
  if (d < 0 || d > top()) return none;
  return reps_[static_cast<std::size_t>(d)];
}

auto EquivariantComplex::orbit_of(int d, std::size_t cell, Parity p) const -> std::pair<std::size_t, int> {
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t k = orbit_[ud][cell];
  if (reps_[ud][k] == cell) return {k, 1};
  return {k, rep_sign_[ud][k] * eps(p)};
}

auto EquivariantComplex::quotient(Parity p) const -> const ChainComplex& {
  return quotient_[p == Parity::Untwisted ? 0 : 1];
}

auto EquivariantComplex::extend(int d, const IntVector& rep_values, Parity p) const -> IntVector {
  if (rep_values.size() != orbit_count(d)) throw std::invalid_argument("wrong number of orbit values");
  IntVector out(cells_.count(d), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto [k, w] = orbit_of(d, c, p);
    out[c] = rep_values[k] * w;
  }
  return out;
}

auto EquivariantComplex::restrict(int d, const IntVector& cell_values) const -> IntVector {
  if (cell_values.size() != cells_.count(d)) throw std::invalid_argument("wrong number of cell values");
  IntVector out;
  for (std::size_t r : reps(d)) out.push_back(cell_values[r]);
  return out;
}

auto twisted_cohomology(const EquivariantComplex& e, int d, Parity p, Coefficients c) -> AbelianGroup {
  return cohomology(e.quotient(p), d, c);
}

auto twisted_homology(const EquivariantComplex& e, int d, Parity p, Coefficients c) -> AbelianGroup {
  return homology(e.quotient(p), d, c);
}

auto reduce_mod2(TwistedClass c) -> TwistedClass {
  c.mod2 = true;
  c.values = mod2(std::move(c.values));
  return c;
}

auto is_closed(const EquivariantComplex& e, const TwistedClass& c) -> bool {
  const auto& q = e.quotient(c.parity);
  if (c.values.size() != e.orbit_count(c.degree)) throw std::invalid_argument("class does not match complex");
  if (c.direction == Direction::Cohomology) return is_zero_mod(q.delta(c.degree).apply(c.values), c.mod2);
  return is_zero_mod(q.d(c.degree).apply(c.values), c.mod2);
}

auto class_order(const EquivariantComplex& e, const TwistedClass& c) -> std::optional<Integer> {
  const auto& q = e.quotient(c.parity);
  if (c.values.size() != e.orbit_count(c.degree)) throw std::invalid_argument("class does not match complex");
  const IntMatrix a = c.direction == Direction::Cohomology ? q.delta(c.degree - 1) : q.d(c.degree + 1);
  if (c.mod2) {
    if (in_column_span_mod2(a, c.values)) return Integer(1);
    return Integer(2);
  }
  return vk::class_order(a, c.values);
}

auto is_trivial(const EquivariantComplex& e, const TwistedClass& c) -> bool {
  auto o = class_order(e, c);
  return o && *o == 1;
}

auto smith_connecting_cohomology(const EquivariantComplex& e, const TwistedClass& c) -> TwistedClass {
  if (c.direction != Direction::Cohomology) throw std::invalid_argument("expected a cohomology class");
  const int d = c.degree;
  IntVector h(e.cells().count(d), 0);
  const auto& rs = e.reps(d);
  for (std::size_t k = 0; k < rs.size(); ++k) h[rs[k]] = c.values.at(k);
  const auto full = e.cells().d(d + 1).transpose().apply(h);
  TwistedClass out{Direction::Cohomology, d + 1, flip(c.parity), c.mod2, e.restrict(d + 1, full)};
  if (out.mod2) out.values = mod2(std::move(out.values));
  return out;
}

auto smith_connecting_homology(const EquivariantComplex& e, const TwistedClass& c) -> TwistedClass {
  if (c.direction != Direction::Homology) throw std::invalid_argument("expected a homology class");
  const int d = c.degree;
  IntVector z(e.cells().count(d), 0);
  const auto& rs = e.reps(d);
  for (std::size_t k = 0; k < rs.size(); ++k) z[rs[k]] = c.values.at(k);
  const auto full = e.cells().d(d).apply(z);
  TwistedClass out{Direction::Homology, d - 1, flip(c.parity), c.mod2, e.restrict(d - 1, full)};
  if (out.mod2) out.values = mod2(std::move(out.values));
  return out;
}

auto unit_class(const EquivariantComplex& e) -> TwistedClass {
  return TwistedClass{Direction::Cohomology, 0, Parity::Untwisted, false, IntVector(e.orbit_count(0), Integer(1))};
}

auto euler_power(const EquivariantComplex& e, int k, bool m2) -> TwistedClass {
  auto c = unit_class(e);
  if (m2) c = reduce_mod2(std::move(c));
  for (int i = 0; i < k; ++i) c = smith_connecting_cohomology(e, c);
  return c;
}

namespace {

auto index_of(const EquivariantComplex& e, bool m2) -> int {
  if (e.top() < 0) return -1;
  auto c = unit_class(e);
  if (m2) c = reduce_mod2(std::move(c));
  for (int k = 0; k <= e.top(); ++k) {
    if (k > 0) c = smith_connecting_cohomology(e, c);
    if (is_trivial(e, c)) return k - 1;
  }
  return e.top();
}

// Basis of the lattice spanned by the generators.
auto lattice_basis(const std::vector<IntVector>& gens, std::size_t ambient) -> std::vector<IntVector> {
  if (gens.empty()) return {};
  const auto snf = smith_normal_form(matrix_from_columns(ambient, gens));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    IntVector v = snf.U.column(i);
    for (auto& x : v) x *= snf.diagonal[i];
    out.push_back(std::move(v));
  }
  return out;
}

auto subquotient(const std::vector<IntVector>& big, const std::vector<IntVector>& small, std::size_t ambient)
    -> AbelianGroup {
  auto basis = lattice_basis(big, ambient);
  std::vector<IntVector> nonzero;
  for (const auto& s : small)
    if (!is_zero(s)) nonzero.push_back(s);
  return lattice_quotient(basis, nonzero, ambient);
}

auto columns(const IntMatrix& m) -> std::vector<IntVector> {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// {x : f x in span(relations)}
auto preimage_of_relations(const IntMatrix& f, const IntMatrix& rel) -> std::vector<IntVector> {
  const auto ker = integer_kernel(f.hconcat(rel));
  std::vector<IntVector> out;
  for (const auto& v : ker) out.emplace_back(v.begin(), v.begin() + static_cast<long>(f.cols()));
  for (auto c : columns(rel)) out.push_back(std::move(c));
  return out;
}

auto one_plus(const IntMatrix& t, int s) -> IntMatrix {
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    ts.push_back(Triplet{i, i, Integer(1)});
    for (const auto& e : t.row(i)) ts.push_back(Triplet{i, e.col, e.value * s});
  }
  return IntMatrix::from_triplets(t.rows(), t.cols(), ts);
}

} // namespace

auto co_index(const EquivariantComplex& e) -> int { return index_of(e, false); }

auto yang_index(const EquivariantComplex& e) -> int { return index_of(e, true); }

auto involution_on_homology(const CellComplex& c, int d) -> Z2Module {
  const auto cycles = integer_kernel(c.d(d));
  const auto n = c.count(d);
  const auto zmat = matrix_from_columns(n, cycles);
  Z2Module m;
  m.rank = cycles.size();
  std::vector<IntVector> rel;
  const auto bd = c.d(d + 1);
  for (std::size_t j = 0; j < bd.cols(); ++j) {
    auto x = solve_integer(zmat, bd.column(j));
    if (!x) throw std::logic_error("boundary outside cycle lattice");
    rel.push_back(std::move(*x));
  }
  m.relations = matrix_from_columns(m.rank, rel);
  const auto t = c.involution_matrix(d);
  std::vector<IntVector> act;
  for (const auto& z : cycles) {
    auto x = solve_integer(zmat, t.apply(z));
    if (!x) throw std::logic_error("involution does not preserve cycles");
    act.push_back(std::move(*x));
  }
  m.action = matrix_from_columns(m.rank, act);
  return m;
}

auto z2_group_cohomology(const Z2Module& m) -> GroupCohomology {
  const auto rels = columns(m.relations);
  GroupCohomology g;
  g.h0 = subquotient(preimage_of_relations(one_plus(m.action, -1), m.relations), rels, m.rank);
  auto image = columns(one_plus(m.action, -1));
  image.insert(image.end(), rels.begin(), rels.end());
  g.h1 = subquotient(preimage_of_relations(one_plus(m.action, 1), m.relations), image, m.rank);
  return g;
}

auto z2_group_homology_h1(const Z2Module& m) -> AbelianGroup {
  auto image = columns(one_plus(m.action, 1));
  const auto rels = columns(m.relations);
  image.insert(image.end(), rels.begin(), rels.end());
  return subquotient(preimage_of_relations(one_plus(m.action, -1), m.relations), image, m.rank);
}

} // namespace vk
