#pragma once

// Exact integer linear algebra: sparse matrices over Z, Smith normal form,
// integer solving, kernels and cokernels.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vk {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Integer value;
};

struct Entry {
  std::size_t col;
  Integer value;
};

// Row-major sparse matrix. Rows keep entries sorted by column with no zeros.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static auto from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& ts) -> IntMatrix;
  static auto from_dense(const std::vector<IntVector>& rows, std::size_t cols) -> IntMatrix;
  static auto from_dense(const std::vector<std::vector<long>>& rows) -> IntMatrix;
  static auto identity(std::size_t n) -> IntMatrix;

  [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }
  [[nodiscard]] auto row(std::size_t i) const -> const std::vector<Entry>& { return data_[i]; }
  [[nodiscard]] auto at(std::size_t i, std::size_t j) const -> Integer;
  [[nodiscard]] auto nnz() const -> std::size_t;
  [[nodiscard]] auto is_zero() const -> bool { return nnz() == 0; }

  [[nodiscard]] auto transpose() const -> IntMatrix;
  [[nodiscard]] auto operator*(const IntMatrix& rhs) const -> IntMatrix;
  [[nodiscard]] auto apply(const IntVector& x) const -> IntVector;
  [[nodiscard]] auto dense() const -> std::vector<IntVector>;
  [[nodiscard]] auto column(std::size_t j) const -> IntVector;
  // Matrix made of the given columns, in order.
  [[nodiscard]] auto select_columns(const std::vector<std::size_t>& js) const -> IntMatrix;
  // [this | other]
  [[nodiscard]] auto hconcat(const IntMatrix& other) const -> IntMatrix;
  // [this ; other]
  [[nodiscard]] auto vconcat(const IntMatrix& other) const -> IntMatrix;

  auto operator==(const IntMatrix& other) const -> bool;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

// Matrix whose columns are the given vectors (each of length `rows`).
auto matrix_from_columns(std::size_t rows, const std::vector<IntVector>& columns) -> IntMatrix;

// A = U * D * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i > 0.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntVector diagonal; // nonzero diagonal entries of D
  std::size_t rank = 0;
};

auto smith_normal_form(const IntMatrix& a) -> SnfDecomposition;

// Finitely generated abelian group Z^free_rank + sum Z/t_i, with t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup {
  std::size_t free_rank = 0;
  IntVector torsion;

  [[nodiscard]] auto is_trivial() const -> bool { return free_rank == 0 && torsion.empty(); }
  [[nodiscard]] auto to_string() const -> std::string;
  // Drop odd torsion: keep only the 2-primary part of each factor.
  [[nodiscard]] auto two_primary() const -> AbelianGroup;
  auto operator==(const AbelianGroup& other) const -> bool;

  // Normalizes an arbitrary list of diagonal entries into invariant factors.
  static auto from_diagonal(std::size_t free_rank, IntVector entries) -> AbelianGroup;
};

auto cokernel(const IntMatrix& a) -> AbelianGroup;
auto rank(const IntMatrix& a) -> std::size_t;
// Nonzero Smith invariants of a (units included).
auto smith_invariants(const IntMatrix& a) -> IntVector;

auto solve_integer(const IntMatrix& a, const IntVector& b) -> std::optional<IntVector>;

// Least k >= 1 with k*b in the column span of a; nullopt when no such k exists.
auto class_order(const IntMatrix& a, const IntVector& b) -> std::optional<Integer>;
auto class_orders(const IntMatrix& a, const std::vector<IntVector>& bs) -> std::vector<std::optional<Integer>>;

// Z-basis of {x : a x = 0}.
auto integer_kernel(const IntMatrix& a) -> std::vector<IntVector>;

// Given generators `sub` of a sublattice of the lattice spanned by the
// linearly independent vectors `basis`, returns basis / sub.
auto lattice_quotient(const std::vector<IntVector>& basis, const std::vector<IntVector>& sub, std::size_t ambient) -> AbelianGroup;

// Coefficients over GF(2).
auto rank_mod2(const IntMatrix& a) -> std::size_t;
auto in_column_span_mod2(const IntMatrix& a, const IntVector& b) -> bool;

auto is_zero(const IntVector& v) -> bool;

} // namespace vk
