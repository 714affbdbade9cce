#include "vk/exactalg.hpp"

#include "elimination.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

auto IntMatrix::from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& ts) -> IntMatrix {
  IntMatrix m(rows, cols);
  for (const auto& t : ts) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix");
    if (t.value != 0) m.data_[t.row].push_back(Entry{t.col, t.value});
  }
  for (auto& row : m.data_) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    std::vector<Entry> merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().col == e.col) {
        merged.back().value += e.value;
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
    row.swap(merged);
  }
  return m;
}

auto IntMatrix::from_dense(const std::vector<IntVector>& rows, std::size_t cols) -> IntMatrix {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) m.data_[i].push_back(Entry{j, rows[i][j]});
  return m;
}

auto IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) -> IntMatrix {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] != 0) m.data_[i].push_back(Entry{j, Integer(rows[i][j])});
  }
  return m;
}

auto IntMatrix::identity(std::size_t n) -> IntMatrix {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(Entry{i, Integer(1)});
  return m;
}

auto IntMatrix::at(std::size_t i, std::size_t j) const -> Integer {
  const auto& row = data_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == j) return it->value;
  return 0;
}

auto IntMatrix::nnz() const -> std::size_t {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

auto IntMatrix::transpose() const -> IntMatrix {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) t.data_[e.col].push_back(Entry{i, e.value});
  return t;
}

auto IntMatrix::operator*(const IntMatrix& rhs) const -> IntMatrix {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i])
      for (const auto& f : rhs.data_[e.col]) ts.push_back(Triplet{i, f.col, e.value * f.value});
  return from_triplets(rows_, rhs.cols_, ts);
}

auto IntMatrix::apply(const IntVector& x) const -> IntVector {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  IntVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i])
      if (x[e.col] != 0) y[i] += e.value * x[e.col];
  return y;
}

auto IntMatrix::dense() const -> std::vector<IntVector> {
  std::vector<IntVector> d(rows_, IntVector(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) d[i][e.col] = e.value;
  return d;
}

auto IntMatrix::column(std::size_t j) const -> IntVector {
  IntVector c(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

auto IntMatrix::select_columns(const std::vector<std::size_t>& js) const -> IntMatrix {
  std::vector<Triplet> ts;
  std::vector<std::vector<std::size_t>> targets(cols_);
  for (std::size_t k = 0; k < js.size(); ++k) targets.at(js[k]).push_back(k);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i])
      for (std::size_t k : targets[e.col]) ts.push_back(Triplet{i, k, e.value});
  return from_triplets(rows_, js.size(), ts);
}

auto IntMatrix::hconcat(const IntMatrix& other) const -> IntMatrix {
  if (rows_ != other.rows_) throw std::invalid_argument("row mismatch in hconcat");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    m.data_[i] = data_[i];
    for (const auto& e : other.data_[i]) m.data_[i].push_back(Entry{e.col + cols_, e.value});
  }
  return m;
}

auto IntMatrix::vconcat(const IntMatrix& other) const -> IntMatrix {
  if (cols_ != other.cols_) throw std::invalid_argument("column mismatch in vconcat");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[i];
  for (std::size_t i = 0; i < other.rows_; ++i) m.data_[rows_ + i] = other.data_[i];
  return m;
}

auto IntMatrix::operator==(const IntMatrix& other) const -> bool {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (data_[i].size() != other.data_[i].size()) return false;
    for (std::size_t k = 0; k < data_[i].size(); ++k)
      if (data_[i][k].col != other.data_[i][k].col || data_[i][k].value != other.data_[i][k].value) return false;
  }
  return true;
}

auto matrix_from_columns(std::size_t rows, const std::vector<IntVector>& columns) -> IntMatrix {
  std::vector<Triplet> ts;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
      if (columns[j][i] != 0) ts.push_back(Triplet{i, j, columns[j][i]});
  }
  return IntMatrix::from_triplets(rows, columns.size(), ts);
}

auto smith_normal_form(const IntMatrix& a) -> SnfDecomposition {
  detail::DenseSnfOptions opts;
  opts.Pinv = true;
  opts.Qinv = true;
  auto r = detail::dense_snf(a.dense(), a.rows(), a.cols(), opts);
  SnfDecomposition out;
  out.U = IntMatrix::from_dense(r.Pinv, a.rows());
  out.V = IntMatrix::from_dense(r.Qinv, a.cols());
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < r.rank; ++i) ts.push_back(Triplet{i, i, r.diagonal[i]});
  out.D = IntMatrix::from_triplets(a.rows(), a.cols(), ts);
  out.diagonal = r.diagonal;
  out.rank = r.rank;
  return out;
}

auto AbelianGroup::from_diagonal(std::size_t free_rank, IntVector entries) -> AbelianGroup {
  for (auto& e : entries) e = abs(e);
  std::erase_if(entries, [](const Integer& e) { return e <= 1; });
  std::sort(entries.begin(), entries.end());
  Integer g;
  Integer l;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      mpz_gcd(g.get_mpz_t(), entries[i].get_mpz_t(), entries[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), entries[i].get_mpz_t(), entries[j].get_mpz_t());
      entries[i] = g;
      entries[j] = l;
    }
  std::erase_if(entries, [](const Integer& e) { return e <= 1; });
  return AbelianGroup{free_rank, entries};
}

auto AbelianGroup::to_string() const -> std::string {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

auto AbelianGroup::two_primary() const -> AbelianGroup {
  IntVector kept;
  for (const auto& t : torsion) {
    Integer p = 1;
    Integer x = t;
    while (mpz_even_p(x.get_mpz_t())) {
      x /= 2;
      p *= 2;
    }
    kept.push_back(p);
  }
  return from_diagonal(free_rank, kept);
}

auto AbelianGroup::operator==(const AbelianGroup& other) const -> bool {
  return free_rank == other.free_rank && torsion == other.torsion;
}

auto smith_invariants(const IntMatrix& a) -> IntVector {
  detail::Eliminator e(a, {}, false);
  return e.invariants();
}

auto rank(const IntMatrix& a) -> std::size_t {
  detail::Eliminator e(a, {}, false);
  return e.rank();
}

auto cokernel(const IntMatrix& a) -> AbelianGroup {
  detail::Eliminator e(a, {}, false);
  return AbelianGroup::from_diagonal(a.rows() - e.rank(), e.invariants());
}

auto solve_integer(const IntMatrix& a, const IntVector& b) -> std::optional<IntVector> {
  detail::Eliminator e(a, {b}, true);
  return e.solve(0);
}

auto class_order(const IntMatrix& a, const IntVector& b) -> std::optional<Integer> {
  detail::Eliminator e(a, {b}, false);
  return e.orders().front();
}

auto class_orders(const IntMatrix& a, const std::vector<IntVector>& bs) -> std::vector<std::optional<Integer>> {
  detail::Eliminator e(a, bs, false);
  return e.orders();
}

auto integer_kernel(const IntMatrix& a) -> std::vector<IntVector> {
  detail::Eliminator e(a, {}, true);
  return e.kernel();
}

auto lattice_quotient(const std::vector<IntVector>& basis, const std::vector<IntVector>& sub, std::size_t ambient)
    -> AbelianGroup {
  const auto b = matrix_from_columns(ambient, basis);
  std::vector<IntVector> coords;
  for (const auto& s : sub) {
    auto c = solve_integer(b, s);
    if (!c) throw std::invalid_argument("sublattice generator outside the lattice");
    coords.push_back(std::move(*c));
  }
  return cokernel(matrix_from_columns(basis.size(), coords));
}

auto is_zero(const IntVector& v) -> bool {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

} // namespace vk
