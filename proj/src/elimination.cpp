#include "elimination.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace vk::detail {

namespace {

auto is_unit(const Integer& v) -> bool { return mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0; }

auto identity(std::size_t n) -> Dense {
  Dense m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Tracks P (row ops) and Pinv, Q (column ops) and Qinv alongside the reduction.
struct Tracker {
  Dense& a;
  DenseSnf& out;
  DenseSnfOptions opts;
  std::size_t rows;
  std::size_t cols;

  // row_x += q * row_y
  void row_add(std::size_t x, std::size_t y, const Integer& q, std::size_t from) {
    for (std::size_t j = from; j < cols; ++j)
      if (a[y][j] != 0) a[x][j] += q * a[y][j];
    if (opts.P)
      for (std::size_t j = 0; j < rows; ++j)
        if (out.P[y][j] != 0) out.P[x][j] += q * out.P[y][j];
    if (opts.Pinv)
      for (std::size_t i = 0; i < rows; ++i)
        if (out.Pinv[i][x] != 0) out.Pinv[i][y] -= q * out.Pinv[i][x];
  }
  void row_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    if (opts.P) std::swap(out.P[x], out.P[y]);
    if (opts.Pinv)
      for (std::size_t i = 0; i < rows; ++i) std::swap(out.Pinv[i][x], out.Pinv[i][y]);
  }
  void row_negate(std::size_t x) {
    for (auto& v : a[x]) v = -v;
    if (opts.P)
      for (auto& v : out.P[x]) v = -v;
    if (opts.Pinv)
      for (std::size_t i = 0; i < rows; ++i) out.Pinv[i][x] = -out.Pinv[i][x];
  }
  // col_x += q * col_y
  void col_add(std::size_t x, std::size_t y, const Integer& q, std::size_t from) {
    for (std::size_t i = from; i < rows; ++i)
      if (a[i][y] != 0) a[i][x] += q * a[i][y];
    if (opts.Q)
      for (std::size_t i = 0; i < cols; ++i)
        if (out.Q[i][y] != 0) out.Q[i][x] += q * out.Q[i][y];
    if (opts.Qinv)
      for (std::size_t j = 0; j < cols; ++j)
        if (out.Qinv[x][j] != 0) out.Qinv[y][j] -= q * out.Qinv[x][j];
  }
  void col_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    if (opts.Q)
      for (std::size_t i = 0; i < cols; ++i) std::swap(out.Q[i][x], out.Q[i][y]);
    if (opts.Qinv) std::swap(out.Qinv[x], out.Qinv[y]);
  }
};

} // namespace

auto dense_snf(Dense a, std::size_t rows, std::size_t cols, DenseSnfOptions opts) -> DenseSnf {
  DenseSnf out;
  if (opts.P) out.P = identity(rows);
  if (opts.Pinv) out.Pinv = identity(rows);
  if (opts.Q) out.Q = identity(cols);
  if (opts.Qinv) out.Qinv = identity(cols);
  Tracker tr{a, out, opts, rows, cols};

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  Integer q;
  Integer r;
  while (t < limit) {
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    tr.row_swap(t, pi);
    tr.col_swap(t, pj);

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = t + 1; i < rows && !changed; ++i) {
        if (a[i][t] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0) tr.row_add(i, t, -q, t);
        if (a[i][t] != 0) {
          tr.row_swap(i, t);
          changed = true;
        }
      }
      if (changed) continue;
      for (std::size_t j = t + 1; j < cols && !changed; ++j) {
        if (a[t][j] == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (q != 0) tr.col_add(j, t, -q, t);
        if (a[t][j] != 0) {
          tr.col_swap(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      if (is_unit(a[t][t])) break;
      for (std::size_t i = t + 1; i < rows && !changed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          mpz_tdiv_r(r.get_mpz_t(), a[i][j].get_mpz_t(), a[t][t].get_mpz_t());
          if (r != 0) {
            tr.row_add(t, i, Integer(1), t);
            changed = true;
            break;
          }
        }
    }
    if (a[t][t] < 0) tr.row_negate(t);
    out.diagonal.push_back(a[t][t]);
    ++t;
  }
  out.rank = t;
  out.d = std::move(a);
  return out;
}

Eliminator::Eliminator(const IntMatrix& a, std::vector<IntVector> rhs, bool record_pivots)
    : rows_(a.rows()), cols_(a.cols()), record_(record_pivots), rhs_(std::move(rhs)) {
  data_.resize(rows_);
  for (std::size_t i = 0; i < rows_; ++i) data_[i] = a.row(i);
  for (const auto& b : rhs_)
    if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  row_done_.assign(rows_, false);
  col_done_.assign(cols_, false);
  eliminate();
  reduce_remainder();
}

void Eliminator::eliminate() {
  std::vector<std::vector<std::size_t>> col_rows(cols_);
  std::vector<std::size_t> col_count(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) {
      col_rows[e.col].push_back(r);
      ++col_count[e.col];
    }
  std::vector<std::size_t> stamp(rows_, std::numeric_limits<std::size_t>::max());
  std::vector<Entry> merged;
  Integer f;

  for (std::size_t step = 0;; ++step) {
    std::size_t best_row = rows_;
    std::size_t best_col = cols_;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_ && best_cost > 0; ++r) {
      if (row_done_[r] || data_[r].empty()) continue;
      const std::size_t len = data_[r].size() - 1;
      for (const auto& e : data_[r]) {
        if (!is_unit(e.value)) continue;
        const std::size_t cost = len * (col_count[e.col] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = e.col;
          if (cost == 0) break;
        }
      }
    }
    if (best_row == rows_) break;

    const std::size_t i = best_row;
    const std::size_t j = best_col;
    const auto& prow = data_[i];
    int unit = 0;
    for (const auto& e : prow)
      if (e.col == j) unit = e.value > 0 ? 1 : -1;

    for (std::size_t r : col_rows[j]) {
      if (r == i || row_done_[r] || stamp[r] == step) continue;
      stamp[r] = step;
      auto& row = data_[r];
      auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
      if (it == row.end() || it->col != j) continue;
      f = it->value * unit;
      merged.clear();
      merged.reserve(row.size() + prow.size());
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < row.size() || y < prow.size()) {
        if (y == prow.size() || (x < row.size() && row[x].col < prow[y].col)) {
          merged.push_back(std::move(row[x++]));
        } else if (x == row.size() || prow[y].col < row[x].col) {
          Integer v = -f * prow[y].value;
          col_rows[prow[y].col].push_back(r);
          ++col_count[prow[y].col];
          merged.push_back(Entry{prow[y].col, std::move(v)});
          ++y;
        } else {
          Integer v = row[x].value - f * prow[y].value;
          if (v != 0) {
            merged.push_back(Entry{row[x].col, std::move(v)});
          } else {
            --col_count[row[x].col];
          }
          ++x;
          ++y;
        }
      }
      row.swap(merged);
      for (auto& b : rhs_)
        if (b[i] != 0) b[r] -= f * b[i];
    }
    col_rows[j].clear();
    row_done_[i] = true;
    col_done_[j] = true;
    for (const auto& e : prow) --col_count[e.col];

    Pivot p{i, j, unit, {}, {}};
    if (record_) {
      for (const auto& e : prow)
        if (e.col != j) p.entries.push_back(e);
      for (const auto& b : rhs_) p.rhs.push_back(b[i]);
    }
    unit_pivots_.push_back(std::move(p));
    data_[i].clear();
  }
}

void Eliminator::reduce_remainder() {
  std::vector<std::size_t> col_pos(cols_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_done_[r]) continue;
    if (data_[r].empty()) {
      zero_rows_.push_back(r);
      continue;
    }
    rem_rows_.push_back(r);
    for (const auto& e : data_[r]) col_pos[e.col] = 0;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    if (col_done_[c]) continue;
    if (col_pos[c] == 0) {
      col_pos[c] = rem_cols_.size();
      rem_cols_.push_back(c);
    } else {
      free_cols_.push_back(c);
    }
  }
  Dense block(rem_rows_.size(), IntVector(rem_cols_.size(), 0));
  for (std::size_t k = 0; k < rem_rows_.size(); ++k)
    for (const auto& e : data_[rem_rows_[k]]) block[k][col_pos[e.col]] = e.value;
  DenseSnfOptions opts;
  opts.P = !rhs_.empty();
  opts.Q = record_;
  rem_ = dense_snf(std::move(block), rem_rows_.size(), rem_cols_.size(), opts);
  for (const auto& b : rhs_) {
    IntVector c(rem_rows_.size(), 0);
    for (std::size_t x = 0; x < rem_rows_.size(); ++x)
      for (std::size_t y = 0; y < rem_rows_.size(); ++y)
        if (rem_.P[x][y] != 0 && b[rem_rows_[y]] != 0) c[x] += rem_.P[x][y] * b[rem_rows_[y]];
    rem_rhs_.push_back(std::move(c));
  }
  data_.clear();
}

auto Eliminator::invariants() const -> IntVector {
  IntVector out(unit_pivots_.size(), Integer(1));
  out.insert(out.end(), rem_.diagonal.begin(), rem_.diagonal.end());
  return out;
}

auto Eliminator::orders() const -> std::vector<std::optional<Integer>> {
  std::vector<std::optional<Integer>> out;
  for (std::size_t k = 0; k < rhs_.size(); ++k) {
    bool finite = true;
    for (std::size_t r : zero_rows_)
      if (rhs_[k][r] != 0) finite = false;
    const auto& c = rem_rhs_[k];
    for (std::size_t i = rem_.rank; i < c.size() && finite; ++i)
      if (c[i] != 0) finite = false;
    if (!finite) {
      out.emplace_back(std::nullopt);
      continue;
    }
    Integer ord = 1;
    Integer g;
    for (std::size_t i = 0; i < rem_.rank; ++i) {
      const Integer& d = rem_.diagonal[i];
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c[i].get_mpz_t());
      Integer need = d / g;
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), need.get_mpz_t());
    }
    out.emplace_back(ord);
  }
  return out;
}

auto Eliminator::solve(std::size_t which) const -> std::optional<IntVector> {
  if (!record_) throw std::logic_error("solve requires recorded pivots");
  auto ord = orders()[which];
  if (!ord || *ord != 1) return std::nullopt;
  IntVector x(cols_, 0);
  const auto& c = rem_rhs_[which];
  IntVector y(rem_cols_.size(), 0);
  for (std::size_t i = 0; i < rem_.rank; ++i) y[i] = c[i] / rem_.diagonal[i];
  for (std::size_t j = 0; j < rem_cols_.size(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < rem_.rank; ++i)
      if (rem_.Q[j][i] != 0) s += rem_.Q[j][i] * y[i];
    x[rem_cols_[j]] = s;
  }
  for (auto it = unit_pivots_.rbegin(); it != unit_pivots_.rend(); ++it) {
    Integer s = it->rhs[which];
    for (const auto& e : it->entries) s -= e.value * x[e.col];
    x[it->col] = it->unit * s;
  }
  return x;
}

auto Eliminator::kernel() const -> std::vector<IntVector> {
  if (!record_) throw std::logic_error("kernel requires recorded pivots");
  std::vector<IntVector> out;
  auto finish = [&](IntVector x) {
    for (auto it = unit_pivots_.rbegin(); it != unit_pivots_.rend(); ++it) {
      Integer s = 0;
      for (const auto& e : it->entries) s -= e.value * x[e.col];
      x[it->col] = it->unit * s;
    }
    out.push_back(std::move(x));
  };
  for (std::size_t f : free_cols_) {
    IntVector x(cols_, 0);
    x[f] = 1;
    finish(std::move(x));
  }
  for (std::size_t i = rem_.rank; i < rem_cols_.size(); ++i) {
    IntVector x(cols_, 0);
    for (std::size_t j = 0; j < rem_cols_.size(); ++j) x[rem_cols_[j]] = rem_.Q[j][i];
    finish(std::move(x));
  }
  return out;
}

} // namespace vk::detail
