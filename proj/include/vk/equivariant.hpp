#pragma once

// Cell complexes with a cellular involution, their parity quotients and the
// Smith connecting maps built on them.

#include "vk/exactalg.hpp"
#include "vk/simplicial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vk {

// Untwisted: cochains with f(tc) = f(c). Twisted: f(tc) = -f(c).
enum class Parity { Untwisted, Twisted };
enum class Direction { Cohomology, Homology };

auto flip(Parity p) -> Parity;
auto power_parity(int k) -> Parity;
auto parity_name(Parity p) -> std::string;

struct SignedCell {
  std::size_t index;
  int sign;
};

// Finite CW complex given by its cellular chain complex, together with a
// cellular involution t: c -> sign * t(c).
struct CellComplex {
  std::vector<std::vector<std::string>> labels;
  std::vector<IntMatrix> boundary; // boundary[d]: C_d -> C_{d-1}; boundary[0] has no rows
  std::vector<std::vector<SignedCell>> involution;

  [[nodiscard]] auto top() const -> int { return static_cast<int>(labels.size()) - 1; }
  [[nodiscard]] auto count(int d) const -> std::size_t;
  [[nodiscard]] auto d(int deg) const -> IntMatrix;
  [[nodiscard]] auto chains() const -> ChainComplex;
  [[nodiscard]] auto involution_matrix(int d) const -> IntMatrix;

  [[nodiscard]] auto involution_squares_to_identity() const -> bool;
  [[nodiscard]] auto involution_commutes_with_boundary() const -> bool;
  [[nodiscard]] auto involution_is_free() const -> bool;
  // Subcomplex spanned by the cells flagged true (must be closed under boundary).
  [[nodiscard]] auto subcomplex(const std::vector<std::vector<bool>>& keep) const -> CellComplex;
  // Quotient by the subcomplex flagged true.
  [[nodiscard]] auto relative(const std::vector<std::vector<bool>>& sub) const -> CellComplex;
};

// Free involution with a chosen representative in each orbit.
class EquivariantComplex {
public:
  EquivariantComplex() = default;
  explicit EquivariantComplex(CellComplex c);
  // reps[d] lists one cell per orbit.
  EquivariantComplex(CellComplex c, const std::vector<std::vector<std::size_t>>& reps);

  [[nodiscard]] auto cells() const -> const CellComplex& { return cells_; }
  [[nodiscard]] auto top() const -> int { return cells_.top(); }
  [[nodiscard]] auto orbit_count(int d) const -> std::size_t;
  [[nodiscard]] auto reps(int d) const -> const std::vector<std::size_t>&;
  // Orbit position of a cell and the sign w with [cell] = w [rep] in the quotient.
  [[nodiscard]] auto orbit_of(int d, std::size_t cell, Parity p) const -> std::pair<std::size_t, int>;
  [[nodiscard]] auto quotient(Parity p) const -> const ChainComplex&;

  // Equivariant cochain (or skew/symmetric chain) on all cells from values on representatives.
  [[nodiscard]] auto extend(int d, const IntVector& rep_values, Parity p) const -> IntVector;
  [[nodiscard]] auto restrict(int d, const IntVector& cell_values) const -> IntVector;

private:
  void build(const std::vector<std::vector<std::size_t>>& reps);

  CellComplex cells_;
  std::vector<std::vector<std::size_t>> reps_;
  std::vector<std::vector<std::size_t>> orbit_;
  std::vector<std::vector<int>> rep_sign_; // t(rep) = s * partner, indexed by orbit
  ChainComplex quotient_[2];
};

struct TwistedClass {
  Direction direction = Direction::Cohomology;
  int degree = 0;
  Parity parity = Parity::Untwisted;
  bool mod2 = false;
  IntVector values; // indexed by orbit representatives
};

auto twisted_cohomology(const EquivariantComplex& e, int d, Parity p, Coefficients c = Coefficients::Integers)
    -> AbelianGroup;
auto twisted_homology(const EquivariantComplex& e, int d, Parity p, Coefficients c = Coefficients::Integers)
    -> AbelianGroup;

auto is_closed(const EquivariantComplex& e, const TwistedClass& c) -> bool;
// Order of the class; nullopt when it has infinite order. Mod 2 classes have order 1 or 2.
auto class_order(const EquivariantComplex& e, const TwistedClass& c) -> std::optional<Integer>;
auto is_trivial(const EquivariantComplex& e, const TwistedClass& c) -> bool;
auto reduce_mod2(TwistedClass c) -> TwistedClass;

auto smith_connecting_cohomology(const EquivariantComplex& e, const TwistedClass& c) -> TwistedClass;
auto smith_connecting_homology(const EquivariantComplex& e, const TwistedClass& c) -> TwistedClass;

auto unit_class(const EquivariantComplex& e) -> TwistedClass;
// e^k: k-fold connecting map applied to the unit 0-cocycle.
auto euler_power(const EquivariantComplex& e, int k, bool mod2 = false) -> TwistedClass;
// Largest k <= dim with e^k nonzero; -1 for the empty complex.
auto co_index(const EquivariantComplex& e) -> int;
auto yang_index(const EquivariantComplex& e) -> int;

// Module Z^rank / span(relations) with t acting by `action`.
struct Z2Module {
  std::size_t rank = 0;
  IntMatrix action;
  IntMatrix relations;
};

// H_d of the cell complex with the induced involution, on a basis of cycles.
auto involution_on_homology(const CellComplex& c, int d) -> Z2Module;

struct GroupCohomology {
  AbelianGroup h0; // invariants
  AbelianGroup h1; // ker(1 + t) / im(1 - t)
};
auto z2_group_cohomology(const Z2Module& m) -> GroupCohomology;
// ker(1 - t) / im(1 + t)
auto z2_group_homology_h1(const Z2Module& m) -> AbelianGroup;

// Products of simplicial complexes with the diagonal removed.
using CellPair = std::pair<Simplex, Simplex>;

struct ProductComplex {
  EquivariantComplex complex;
  std::vector<std::vector<CellPair>> pairs; // per degree, aligned with cell indices
  std::vector<std::map<CellPair, std::size_t>> lookup;

  [[nodiscard]] auto index(const Simplex& a, const Simplex& b) const -> std::optional<std::size_t>;
};

// Cells s x t with s, t disjoint simplices of k.
auto deleted_product(const SimplicialComplex& k) -> ProductComplex;
// Cells s x t of y x y with s, t disjoint and at least one of them in k.
auto relative_deleted_product(const SimplicialComplex& k, const SimplicialComplex& y) -> ProductComplex;

} // namespace vk
