#pragma once

// Chord diagrams on an oriented circle, the blown-up configuration space of
// their quotient graph, type 1 invariants given by derivative data, arrow
// diagram formulas and planarity.

#include "vk/equivariant.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace vk {

// Perfect matching on positions 0..2m-1 of an oriented circle. Arc i runs from
// position i to position i+1 (mod 2m). Chords are numbered by first occurrence.
struct ChordDiagram {
  std::vector<int> partner;
  std::vector<int> chord_at;

  [[nodiscard]] auto chords() const -> int { return static_cast<int>(partner.size()) / 2; }
  [[nodiscard]] auto arcs() const -> int { return static_cast<int>(partner.size()); }
  [[nodiscard]] auto arc_start(int arc) const -> int { return chord_at[static_cast<std::size_t>(arc)]; }
  [[nodiscard]] auto arc_end(int arc) const -> int;
  // Positions of a chord, smaller first.
  [[nodiscard]] auto positions(int chord) const -> std::pair<int, int>;
  [[nodiscard]] auto to_string() const -> std::string;
  auto operator==(const ChordDiagram& o) const -> bool { return partner == o.partner; }
};

// Half-edges of the quotient graph: 2*position is the end of arc position-1 arriving
// at the position, 2*position+1 is the start of arc position. The strand through a
// position consists of its two half-edges.
inline auto half_edge_in(int position) -> int { return 2 * position; }
inline auto half_edge_out(int position) -> int { return 2 * position + 1; }
inline auto strand_of(int half_edge) -> int { return half_edge / 2; }

auto diagram_from_matching(const std::vector<int>& partner) -> ChordDiagram;
// Double-occurrence word; throws ParseError unless every token occurs exactly twice.
auto parse_diagram(const std::string& word) -> ChordDiagram;
// Every perfect matching on 2m positions.
auto all_diagrams(int m) -> std::vector<ChordDiagram>;

auto interlacement(const ChordDiagram& d) -> std::vector<std::pair<int, int>>;
struct Factorization {
  int count = 0;
  std::vector<int> component; // per chord
};
auto irreducible_factors(const ChordDiagram& d) -> Factorization;
auto expected_gamma1_rank(const ChordDiagram& d) -> std::size_t;

// Closed walk in the quotient graph using each arc at most once. Steps are (arc, +1)
// along the circle orientation or (arc, -1) against it.
struct Trail {
  std::vector<std::pair<int, int>> steps;
  [[nodiscard]] auto direction(int arc) const -> int; // 0 when unused
  auto operator==(const Trail& o) const -> bool { return steps == o.steps; }
};
// One representative per closed trail up to rotation and reversal.
auto closed_trails(const ChordDiagram& d) -> std::vector<Trail>;
// Chords where both trails pass and each goes straight along a strand.
auto transversal_vertices(const ChordDiagram& d, const Trail& a, const Trail& b) -> std::vector<int>;
auto manturov_pairs(const ChordDiagram& d) -> std::vector<std::pair<Trail, Trail>>;

// Gauss realizability by brute force over the strand-alternating rotation systems.
// Returns the mirror flags of a plane realization when one exists.
auto plane_rotation_system(const ChordDiagram& d) -> std::optional<std::vector<bool>>;

// Blown-up configuration space: product cells of G x G away from the squares C x C,
// with the star of each diagonal vertex (w, w) replaced by the four vertical faces
// of a cube whose boundary carries the antipodal involution.
struct BlownUpComplex {
  ChordDiagram diagram;
  EquivariantComplex complex;
  std::vector<std::vector<bool>> nu;      // cube cells, per degree
  std::vector<std::size_t> square;        // arcs*C + D -> 2-cell of the truncated square, npos on C = D
  std::vector<std::size_t> faces;         // 2-cells of the cube faces, four per chord
};

auto build_config_space(const ChordDiagram& d) -> BlownUpComplex;
// G x G minus the open squares C x C, with the swap involution (not free on the diagonal).
struct GridComplex {
  CellComplex cells;
  std::vector<std::size_t> square; // arcs*C + D -> 2-cell, npos on C = D
};
auto grid_complex(const ChordDiagram& d) -> GridComplex;

// Ranks of the twisted degree-2 cohomology of the quotient and of the
// skew-invariant part of H_2 of the grid complex.
auto gamma1_rank(const BlownUpComplex& b) -> std::size_t;
auto skew_h2_rank(const ChordDiagram& d) -> std::size_t;

// Integer value per unordered pair of arcs.
struct DerivativeData {
  int arcs = 0;
  std::map<std::pair<int, int>, Integer> values; // keys with first <= second, zeros omitted

  [[nodiscard]] auto at(int c, int d) const -> Integer;
  void set(int c, int d, const Integer& v);
  auto operator+(const DerivativeData& o) const -> DerivativeData;
};
// Lines "C D value"; '#' starts a comment.
auto parse_derivative(const std::string& text, int arcs) -> DerivativeData;
auto format_derivative(const DerivativeData& v) -> std::string;

struct RelationViolation : std::runtime_error {
  RelationViolation(std::string kind, std::string witness);
  std::string kind;    // "one-term" or "four-term"
  std::string witness; // offending cell label
};

// Skew-invariant 2-cycle of the grid complex; values on the squares C x D with C < D.
auto validate_derivative(const ChordDiagram& d, const DerivativeData& v) -> TwistedClass;
// Integer basis of the derivative data satisfying both relations.
auto type1_basis(const ChordDiagram& d) -> std::vector<DerivativeData>;

// The blown-up cycle as a chain on all cells, and as a twisted class on representatives.
auto lifted_chain(const BlownUpComplex& b, const DerivativeData& v) -> IntVector;
auto lift_cycle(const BlownUpComplex& b, const DerivativeData& v) -> TwistedClass;

// Coefficient per ordered pair of arcs plus a constant. When doubled is set the
// formula is half of the stored values.
struct ArrowFormula {
  int arcs = 0;
  std::vector<Integer> coefficient; // arcs*C + D
  Integer constant = 0;
  bool doubled = false;

  [[nodiscard]] auto at(int c, int d) const -> Integer { return coefficient[static_cast<std::size_t>(c * arcs + d)]; }
};

auto arrow_formula_obstruction(const BlownUpComplex& b, const DerivativeData& v) -> TwistedClass;
auto integral_arrow_formula(const BlownUpComplex& b, const DerivativeData& v) -> std::optional<ArrowFormula>;
auto half_integer_formula(const ChordDiagram& d, const DerivativeData& v) -> ArrowFormula;
// Twice iterated connecting map evaluated in H_0 of the quotient with twisted coefficients.
auto propto(const BlownUpComplex& b, const DerivativeData& v) -> int;

// Linking number derivative of two edge-disjoint oriented trails.
auto v_ab_derivative(const ChordDiagram& d, const Trail& a, const Trail& b) -> DerivativeData;

struct PlanarityReport {
  bool planar = false;
  bool zeta_trivial = false;
  std::vector<std::pair<Trail, Trail>> manturov;
  std::optional<std::vector<bool>> rotation;
};
// Throws std::logic_error if the three methods disagree.
auto planarity(const BlownUpComplex& b) -> PlanarityReport;

struct H1Report {
  AbelianGroup h1;
  AbelianGroup relative_h1;
  AbelianGroup kernel;          // image of H_1 of the Moebius locus
  AbelianGroup kernel_mod_odd;
  bool relative_cap_vanishes = false;
};
auto h1_structure(const BlownUpComplex& b) -> H1Report;

// Walk along the circle: chord tokens are chord labels in diagram order; a crossing
// passage is 'o' or 'u' (over / under), the crossing id, then '+' or '-'.
struct CrossingPassage {
  int id = 0;
  bool over = false;
  int sign = 1;
  auto operator==(const CrossingPassage&) const -> bool = default;
};
struct SingularKnotDiagram {
  ChordDiagram diagram;
  // Crossing passages on each arc, in order along the arc.
  std::vector<std::vector<CrossingPassage>> passages;
};
auto parse_knot_diagram(const std::string& text) -> SingularKnotDiagram;
auto format_knot_diagram(const SingularKnotDiagram& k) -> std::string;
auto evaluate_arrow_formula(const SingularKnotDiagram& k, const ArrowFormula& f) -> mpq_class;
// Same diagram with one crossing switched (over/under exchanged, sign reversed).
auto crossing_change(const SingularKnotDiagram& k, int id) -> SingularKnotDiagram;
// Arcs holding the under and over passages of a crossing, and its sign.
auto crossing_arcs(const SingularKnotDiagram& k, int id) -> std::tuple<int, int, int>;
// Random crossings between random arcs, seeded.
auto random_knot_diagram(const ChordDiagram& d, int crossings, unsigned seed) -> SingularKnotDiagram;

} // namespace vk
