#pragma once

// Internal elimination engines shared by the exactalg entry points.

#include "vk/exactalg.hpp"

#include <cstddef>
#include <vector>

namespace vk::detail {

using Dense = std::vector<IntVector>;

// P * A * Q = D for a dense matrix. Transforms and their inverses are only
// accumulated when requested.
struct DenseSnf {
  Dense d;
  Dense P, Pinv, Q, Qinv;
  std::size_t rank = 0;
  IntVector diagonal;
};

struct DenseSnfOptions {
  bool P = false;
  bool Pinv = false;
  bool Q = false;
  bool Qinv = false;
};

auto dense_snf(Dense a, std::size_t rows, std::size_t cols, DenseSnfOptions opts) -> DenseSnf;

// Sparse elimination with unit pivots first, followed by a dense Smith
// reduction of whatever block is left. Right-hand sides follow the row
// operations so membership in the column span can be decided afterwards.
class Eliminator {
public:
  Eliminator(const IntMatrix& a, std::vector<IntVector> rhs, bool record_pivots);

  [[nodiscard]] auto rank() const -> std::size_t { return unit_pivots_.size() + rem_.rank; }
  [[nodiscard]] auto invariants() const -> IntVector;

  // For each rhs: least k with k*b in the span, nullopt if none.
  [[nodiscard]] auto orders() const -> std::vector<std::optional<Integer>>;
  // Requires record_pivots.
  [[nodiscard]] auto solve(std::size_t which) const -> std::optional<IntVector>;
  [[nodiscard]] auto kernel() const -> std::vector<IntVector>;

private:
  struct Pivot {
    std::size_t row;
    std::size_t col;
    int unit;
    std::vector<Entry> entries; // row contents at pivot time, pivot excluded
    IntVector rhs;
  };

  void eliminate();
  void reduce_remainder();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool record_ = false;
  std::vector<std::vector<Entry>> data_;
  std::vector<IntVector> rhs_; // rhs_[k][row]
  std::vector<bool> row_done_;
  std::vector<bool> col_done_;
  std::vector<Pivot> unit_pivots_;

  // Remainder block.
  std::vector<std::size_t> rem_rows_;
  std::vector<std::size_t> rem_cols_;
  std::vector<std::size_t> zero_rows_;
  std::vector<std::size_t> free_cols_;
  DenseSnf rem_;
  std::vector<IntVector> rem_rhs_; // P * rhs restricted to rem_rows_
};

} // namespace vk::detail
