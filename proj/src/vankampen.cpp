#include "vk/obstructions.hpp"

#include <algorithm>
#include <functional>

namespace vk {

namespace {

// Overall sign of the moment-curve pattern, fixed by agreement with geometric_cocycle,
// whose frame lists the edges of the first simplex before those of the second.
auto moment_sign(int n) -> int { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

auto sgn(const Rational& q) -> int { return sgn(q.get_num()); }

// Gaussian elimination over Q; returns the determinant and, when nonzero, the solution.
auto solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
    -> std::pair<Rational, std::vector<Rational>> {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {Rational(0), {}};
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(b[p], b[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return {det, x};
}

// Whether A x = b has a rational solution.
auto consistent(std::vector<std::vector<Rational>> a, std::vector<Rational> b) -> bool {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  return true;
}

auto determinant(std::vector<std::vector<Rational>> a) -> Rational {
  const std::size_t n = a.size();
  return solve_rational(std::move(a), std::vector<Rational>(n)).first;
}

auto top_values(const ProductComplex& p, int n, const std::function<Integer(const Simplex&, const Simplex&)>& f)
    -> TwistedClass {
  const int deg = 2 * n;
  TwistedClass c{Direction::Cohomology, deg, Parity::Untwisted, false, {}};
  if (deg > p.complex.top()) return c;
  const auto& cells = p.pairs[static_cast<std::size_t>(deg)];
  IntVector full(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& [a, b] = cells[i];
    if (static_cast<int>(a.size()) == n + 1 && static_cast<int>(b.size()) == n + 1) full[i] = f(a, b);
  }
  c.values = p.complex.restrict(deg, full);
  return c;
}

auto fill_report(const EquivariantComplex& e, TwistedClass c, int ambient) -> ObstructionReport {
  ObstructionReport r;
  r.ambient = ambient;
  r.order = class_order(e, c);
  r.trivial = r.order && *r.order == 1;
  r.mod2_trivial = is_trivial(e, reduce_mod2(c));
  r.klass = std::move(c);
  return r;
}

} // namespace

auto verdict_name(Verdict v) -> std::string {
  switch (v) {
  case Verdict::Embeds: return "Embeds";
  case Verdict::DoesNotEmbed: return "DoesNotEmbed";
  case Verdict::NotIsotopic: return "NotIsotopic";
  case Verdict::Unknown: break;
  }
  return "Unknown";
}

auto moment_curve_cocycle(const ProductComplex& p, int n, const std::map<Vertex, Integer>& position) -> TwistedClass {
  std::map<Integer, Vertex> seen;
  for (const auto& [v, t] : position)
    if (!seen.emplace(t, v).second) throw std::invalid_argument("vertex positions must be distinct");
  return top_values(p, n, [&](const Simplex& a, const Simplex& b) -> Integer {
    std::vector<std::pair<Integer, int>> merged;
    for (auto v : a) merged.emplace_back(position.at(v), 0);
    for (auto v : b) merged.emplace_back(position.at(v), 1);
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 1; i < merged.size(); ++i)
      if (merged[i].second == merged[i - 1].second) return 0;
    const int first_is_a = merged[0].second == 0;
    return moment_sign(n) * (first_is_a ? 1 : (n % 2 == 0 ? 1 : -1));
  });
}

auto moment_curve_cocycle(const ProductComplex& p, int n) -> TwistedClass {
  std::map<Vertex, Integer> pos;
  for (const auto& v : p.pairs.empty() ? std::vector<CellPair>{} : p.pairs[0]) pos.emplace(v.first[0], v.first[0]);
  return moment_curve_cocycle(p, n, pos);
}

auto moment_curve_points(const SimplicialComplex& k, int n) -> std::map<Vertex, std::vector<Rational>> {
  std::map<Vertex, std::vector<Rational>> out;
  for (auto v : k.vertices()) {
    std::vector<Rational> x;
    Rational t = v;
    Rational pw = 1;
    for (int i = 0; i < 2 * n; ++i) {
      pw *= t;
      x.push_back(pw);
    }
    out.emplace(v, x);
  }
  return out;
}

auto geometric_cocycle(const ProductComplex& p, int n, const std::map<Vertex, std::vector<Rational>>& coords)
    -> TwistedClass {
  const auto dim = static_cast<std::size_t>(2 * n);
  return top_values(p, n, [&](const Simplex& a, const Simplex& b) -> Integer {
    // Columns: barycentric weights of a, then of b; rows: coordinates, then the two affine constraints.
    const std::size_t m = dim + 2;
    std::vector<std::vector<Rational>> sys(m, std::vector<Rational>(m));
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto& x = coords.at(a[j]);
      for (std::size_t r = 0; r < dim; ++r) sys[r][j] = x[r];
      sys[dim][j] = 1;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto& x = coords.at(b[j]);
      for (std::size_t r = 0; r < dim; ++r) sys[r][a.size() + j] = -x[r];
      sys[dim + 1][a.size() + j] = 1;
    }
    std::vector<Rational> rhs(m, 0);
    rhs[dim] = 1;
    rhs[dim + 1] = 1;
    auto [det, w] = solve_rational(sys, rhs);
    if (det == 0 && !consistent(sys, rhs)) return 0; // parallel affine hulls
    if (det == 0)
      throw DegenerateInput("simplices " + simplex_to_string(a) + " and " + simplex_to_string(b) +
                            " are not in general position");
    for (const auto& x : w)
      if (x == 0)
        throw DegenerateInput("simplices " + simplex_to_string(a) + " and " + simplex_to_string(b) +
                              " meet on their boundary");
    if (!std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; })) return 0;
    std::vector<std::vector<Rational>> frame(dim, std::vector<Rational>(dim));
    const auto& a0 = coords.at(a[0]);
    const auto& b0 = coords.at(b[0]);
    for (std::size_t j = 1; j < a.size(); ++j)
      for (std::size_t r = 0; r < dim; ++r) frame[r][j - 1] = coords.at(a[j])[r] - a0[r];
    for (std::size_t j = 1; j < b.size(); ++j)
      for (std::size_t r = 0; r < dim; ++r) frame[r][a.size() - 1 + j - 1] = coords.at(b[j])[r] - b0[r];
    return sgn(determinant(frame));
  });
}

auto van_kampen(const SimplicialComplex& k, const ProductComplex& p) -> ObstructionReport {
  const int n = std::max(k.dimension(), 0);
  auto r = fill_report(p.complex, moment_curve_cocycle(p, n), 2 * n);
  if (!r.trivial)
    r.verdict = Verdict::DoesNotEmbed;
  else
    r.verdict = n == 2 ? Verdict::Unknown : Verdict::Embeds;
  return r;
}

auto van_kampen(const SimplicialComplex& k) -> ObstructionReport { return van_kampen(k, deleted_product(k)); }

auto h2n_direct(const SimplicialComplex& k) -> AbelianGroup {
  const int n = std::max(k.dimension(), 0);
  return twisted_cohomology(deleted_product(k).complex, 2 * n, Parity::Untwisted);
}

auto panelled_cone_obstruction(const SimplicialComplex& k) -> ObstructionReport {
  const int n = std::max(k.dimension(), 0);
  const auto p = deleted_product(cone(k));
  auto r = fill_report(p.complex, euler_power(p.complex, 2 * n + 1), 2 * n + 1);
  r.co_index = co_index(p.complex);
  r.verdict = *r.co_index < 2 * n + 1 ? Verdict::Embeds : Verdict::DoesNotEmbed;
  return r;
}

} // namespace vk
