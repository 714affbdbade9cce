#include "doctest.h"

#include "vk/chords.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace vk;

namespace {

constexpr auto npos = static_cast<std::size_t>(-1);

auto manturov_data(const ChordDiagram& d) -> std::vector<DerivativeData> {
  std::vector<DerivativeData> out;
  for (const auto& [a, b] : manturov_pairs(d)) out.push_back(v_ab_derivative(d, a, b));
  return out;
}

// Sign-normalized change of the evaluation when crossing `id` is switched.
auto crossing_derivative(const SingularKnotDiagram& k, int id, const ArrowFormula& f) -> mpq_class {
  const auto [under, over, sign] = crossing_arcs(k, id);
  const mpq_class diff = evaluate_arrow_formula(k, f) - evaluate_arrow_formula(crossing_change(k, id), f);
  return sign * diff;
}

auto random_pair_data(int arcs, std::mt19937& rng) -> DerivativeData {
  DerivativeData v;
  v.arcs = arcs;
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e) v.set(c, e, Integer(static_cast<int>(rng() % 3) - 1));
  return v;
}

auto in_span(const std::vector<DerivativeData>& basis, const DerivativeData& v) -> bool {
  const int arcs = v.arcs;
  std::vector<IntVector> cols;
  for (const auto& b : basis) {
    IntVector col;
    for (int c = 0; c < arcs; ++c)
      for (int e = c + 1; e < arcs; ++e) col.push_back(b.at(c, e));
    cols.push_back(std::move(col));
  }
  IntVector target;
  for (int c = 0; c < arcs; ++c)
    for (int e = c + 1; e < arcs; ++e) target.push_back(v.at(c, e));
  if (cols.empty()) return std::all_of(target.begin(), target.end(), [](const Integer& x) { return x == 0; });
  return solve_integer(matrix_from_columns(target.size(), cols), target).has_value();
}

} // namespace

TEST_CASE("parse_diagram reads double occurrence words") {
  const auto d = parse_diagram("1 2 1 2");
  CHECK(d.chords() == 2);
  CHECK(d.arcs() == 4);
  CHECK(d.partner == std::vector<int>{2, 3, 0, 1});
  CHECK(d.to_string() == "1 2 1 2");

  const auto e = parse_diagram("a a b b");
  CHECK(e.partner == std::vector<int>{1, 0, 3, 2});
  CHECK(e.to_string() == "1 1 2 2");

  CHECK_THROWS_AS(parse_diagram("1 2 1"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1 1 1 1"), ParseError);
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
}

TEST_CASE("all_diagrams enumerates every matching") {
  CHECK(all_diagrams(1).size() == 1);
  CHECK(all_diagrams(3).size() == 15);
  CHECK(all_diagrams(4).size() == 105);
  for (const auto& d : all_diagrams(3)) CHECK(parse_diagram(d.to_string()) == d);
}

TEST_CASE("interlacement and irreducible factors") {
  CHECK(interlacement(parse_diagram("1 2 1 2")) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(irreducible_factors(parse_diagram("1 2 1 2")).count == 1);
  CHECK(interlacement(parse_diagram("1 1 2 2")).empty());
  CHECK(irreducible_factors(parse_diagram("1 1 2 2")).count == 2);
  CHECK(interlacement(parse_diagram("1 2 3 1 2 3")).size() == 3);
  CHECK(irreducible_factors(parse_diagram("1 2 3 1 2 3")).count == 1);
  const auto f = irreducible_factors(parse_diagram("1 2 1 2 3 3"));
  CHECK(f.count == 2);
  CHECK(f.component[0] == f.component[1]);
  CHECK(f.component[0] != f.component[2]);
}

TEST_CASE("blown-up complex: free involution and annular cube loci") {
  for (const char* word : {"1 1", "1 2 1 2", "1 1 2 2", "1 2 3 1 2 3"}) {
    CAPTURE(word);
    const auto b = build_config_space(parse_diagram(word));
    const auto& cells = b.complex.cells();
    const auto m = static_cast<std::size_t>(b.diagram.chords());
    CHECK(cells.involution_is_free());
    CHECK(cells.involution_squares_to_identity());
    CHECK(cells.involution_commutes_with_boundary());
    CHECK(b.faces.size() == 4 * m);

    const auto nu = cells.subcomplex(b.nu);
    CHECK(homology(nu.chains(), 0) == AbelianGroup{m, {}});
    CHECK(homology(nu.chains(), 1) == AbelianGroup{m, {}});
    CHECK(homology(nu.chains(), 2).is_trivial());

    // Edges of the cube faces lying on one face only form the boundary circles.
    const auto bd = cells.d(2).transpose();
    std::vector<int> face_count(cells.count(1), 0);
    for (auto f : b.faces)
      for (const auto& x : bd.row(f)) ++face_count[x.col];
    std::vector<std::size_t> parent(cells.count(0));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    const auto d1 = cells.d(1).transpose();
    std::vector<std::size_t> rim;
    for (std::size_t e = 0; e < cells.count(1); ++e) {
      if (face_count[e] != 1) continue;
      rim.push_back(e);
      const auto& ends = d1.row(e);
      REQUIRE(ends.size() == 2);
      parent[find(ends[0].col)] = find(ends[1].col);
    }
    CHECK(rim.size() == 8 * m);
    const auto t = cells.involution_matrix(1).transpose();
    std::set<std::size_t> circles;
    for (auto e : rim) {
      const auto& image = t.row(e);
      REQUIRE(image.size() == 1);
      const auto here = find(d1.row(e)[0].col);
      const auto there = find(d1.row(image[0].col)[0].col);
      CHECK(here != there);
      circles.insert(here);
    }
    CHECK(circles.size() == 2 * m);
  }
}

TEST_CASE("gamma1 rank matches the chord count formula and the skew homology oracle") {
  CHECK(gamma1_rank(build_config_space(parse_diagram("1 2 1 2"))) == 2);
  CHECK(gamma1_rank(build_config_space(parse_diagram("1 1 2 2"))) == 3);
  CHECK(gamma1_rank(build_config_space(parse_diagram("1 2 3 1 2 3"))) == 4);
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      CAPTURE(d.to_string());
      const auto r = gamma1_rank(build_config_space(d));
      CHECK(r == expected_gamma1_rank(d));
      CHECK(r == skew_h2_rank(d));
      CHECK(r == type1_basis(d).size());
    }
}

TEST_CASE("excision: H2 relative to the cube loci equals H2 of the grid") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      CAPTURE(d.to_string());
      const auto b = build_config_space(d);
      const auto rel = b.complex.cells().relative(b.nu);
      CHECK(homology(rel.chains(), 2) == homology(grid_complex(d).cells.chains(), 2));
    }
}

TEST_CASE("skew part of H2 of the grid has trivial first group cohomology") {
  const auto g = grid_complex(parse_diagram("1 2 1 2"));
  CHECK(z2_group_cohomology(involution_on_homology(g.cells, 2)).h1.is_trivial());
}

TEST_CASE("validate_derivative enforces the one-term and four-term relations") {
  const auto d = parse_diagram("1 2 1 2");
  DerivativeData zero;
  zero.arcs = 4;
  const auto z = validate_derivative(d, zero);
  CHECK(std::all_of(z.values.begin(), z.values.end(), [](const Integer& x) { return x == 0; }));

  auto one_term = zero;
  one_term.set(2, 2, Integer(1));
  try {
    validate_derivative(d, one_term);
    FAIL("one-term violation accepted");
  } catch (const RelationViolation& e) {
    CHECK(e.kind == "one-term");
    CHECK(e.witness == "a2xa2");
  }

  auto four_term = zero;
  four_term.set(0, 1, Integer(1));
  try {
    validate_derivative(d, four_term);
    FAIL("four-term violation accepted");
  } catch (const RelationViolation& e) {
    CHECK(e.kind == "four-term");
    CHECK_FALSE(e.witness.empty());
  }

  for (const auto& v : manturov_data(d)) CHECK_NOTHROW(validate_derivative(d, v));

  DerivativeData wrong;
  wrong.arcs = 6;
  CHECK_THROWS_AS(validate_derivative(d, wrong), std::invalid_argument);
}

TEST_CASE("validate_derivative accepts exactly the integer span of the basis") {
  std::mt19937 rng(41);
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      const auto basis = type1_basis(d);
      for (int trial = 0; trial < 8; ++trial) {
        auto v = random_pair_data(d.arcs(), rng);
        if (trial % 2 == 0) {
          DerivativeData combo;
          combo.arcs = d.arcs();
          for (const auto& b : basis)
            for (int k = static_cast<int>(rng() % 5) - 2; k != 0; k += k > 0 ? -1 : 1) combo = combo + b;
          v = combo;
        }
        bool accepted = true;
        try {
          validate_derivative(d, v);
        } catch (const RelationViolation&) {
          accepted = false;
        }
        CHECK(accepted == in_span(basis, v));
      }
    }
}

TEST_CASE("parse_derivative and format_derivative round trip") {
  const auto v = parse_derivative("# comment\n0 1 2\n1 3 -1  # trailing\n\n", 4);
  CHECK(v.at(1, 0) == 2);
  CHECK(v.at(3, 1) == -1);
  CHECK(v.at(0, 2) == 0);
  CHECK(parse_derivative(format_derivative(v), 4).values == v.values);
  CHECK_THROWS_AS(parse_derivative("0 1\n", 4), ParseError);
  CHECK_THROWS_AS(parse_derivative("0 x 1\n", 4), ParseError);
  CHECK_THROWS_AS(parse_derivative("0 1 1\n1 0 2\n", 4), ParseError);
  CHECK_THROWS_AS(parse_derivative("0 9 1\n", 4), ParseError);
}

TEST_CASE("lifted cycles are skew-invariant and extend the proper transform") {
  const auto b = build_config_space(parse_diagram("1 2 1 2"));
  const auto& cells = b.complex.cells();
  DerivativeData zero;
  zero.arcs = 4;
  const auto z0 = lifted_chain(b, zero);
  CHECK(std::all_of(z0.begin(), z0.end(), [](const Integer& x) { return x == 0; }));

  const auto t = cells.involution_matrix(2);
  for (const auto& v : manturov_data(b.diagram)) {
    const auto z = lifted_chain(b, v);
    CHECK(cells.d(2).apply(z) == IntVector(cells.count(1), 0));
    auto tz = t.apply(z);
    for (auto& x : tz) x = -x;
    CHECK(tz == z);
    std::vector<bool> on_square(cells.count(2), false);
    for (int c = 0; c < 4; ++c)
      for (int e = 0; e < 4; ++e) {
        const auto s = b.square[static_cast<std::size_t>(c * 4 + e)];
        if (s == npos) continue;
        on_square[s] = true;
        CHECK(z[s] == v.at(c, e));
      }
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!on_square[i] && !b.nu[2][i]) CHECK(z[i] == 0);
    CHECK(is_closed(b.complex, lift_cycle(b, v)));
  }
}

TEST_CASE("two linked Manturov cycles: obstruction, propto and their sum") {
  const auto b = build_config_space(parse_diagram("1 2 1 2"));
  const auto data = manturov_data(b.diagram);
  REQUIRE(data.size() == 2);
  for (const auto& v : data) {
    CHECK_FALSE(is_trivial(b.complex, arrow_formula_obstruction(b, v)));
    CHECK_FALSE(integral_arrow_formula(b, v).has_value());
    CHECK(propto(b, v) == 1);
  }
  const auto sum = data[0] + data[1];
  CHECK(propto(b, sum) == 0);
  CHECK(is_trivial(b.complex, arrow_formula_obstruction(b, sum)));
  CHECK(integral_arrow_formula(b, sum).has_value());
}

TEST_CASE("planar diagrams: every type 1 invariant has an integral formula") {
  for (const std::string word : {"1 1", "1 1 2 2", "1 2 2 1", "1 2 3 1 2 3", "1 2 2 3 3 1"}) {
    CAPTURE(word);
    const auto b = build_config_space(parse_diagram(word));
    REQUIRE(plane_rotation_system(b.diagram).has_value());
    for (const auto& v : type1_basis(b.diagram)) {
      CHECK(propto(b, v) == 0);
      const auto f = integral_arrow_formula(b, v);
      REQUIRE(f.has_value());
      for (int c = 0; c < b.diagram.arcs(); ++c)
        for (int e = 0; e < b.diagram.arcs(); ++e)
          if (c != e) CHECK(f->at(c, e) + f->at(e, c) == v.at(c, e));
    }
  }
}

TEST_CASE("propto of v_ab is the parity of transversal common vertices") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      const auto b = build_config_space(d);
      const auto trails = closed_trails(d);
      for (std::size_t i = 0; i < trails.size(); ++i)
        for (std::size_t j = i + 1; j < trails.size(); ++j) {
          bool disjoint = true;
          for (auto [a, s] : trails[i].steps)
            if (trails[j].direction(a) != 0) disjoint = false;
          if (!disjoint) {
            CHECK_THROWS_AS(v_ab_derivative(d, trails[i], trails[j]), std::invalid_argument);
            continue;
          }
          const auto v = v_ab_derivative(d, trails[i], trails[j]);
          CHECK_NOTHROW(validate_derivative(d, v));
          CHECK(propto(b, v) == static_cast<int>(transversal_vertices(d, trails[i], trails[j]).size() % 2));
        }
    }
}

TEST_CASE("irreducible diagrams: propto vanishes iff the formula obstruction does") {
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      if (irreducible_factors(d).count != 1) continue;
      const auto b = build_config_space(d);
      const auto basis = type1_basis(d);
      std::vector<DerivativeData> tests = basis;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) tests.push_back(basis[i] + basis[j]);
      for (const auto& v : tests)
        CHECK((propto(b, v) == 0) == is_trivial(b.complex, arrow_formula_obstruction(b, v)));
    }
}

TEST_CASE("Manturov pairs and planarity") {
  CHECK(manturov_pairs(parse_diagram("1 1 2 2")).empty());
  CHECK(manturov_pairs(parse_diagram("1 2 1 2")).size() == 2);
  const auto one = planarity(build_config_space(parse_diagram("1 1")));
  CHECK(one.planar);
  CHECK(one.zeta_trivial);
  CHECK(one.rotation.has_value());
  const auto two = planarity(build_config_space(parse_diagram("1 2 1 2")));
  CHECK_FALSE(two.planar);
  CHECK_FALSE(two.zeta_trivial);
  CHECK_FALSE(two.manturov.empty());
  CHECK_FALSE(two.rotation.has_value());
  CHECK(planarity(build_config_space(parse_diagram("1 2 3 1 2 3"))).planar);

  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) CHECK_NOTHROW(planarity(build_config_space(d)));
}

TEST_CASE("h1 structure of the quotient and the Moebius kernel") {
  const auto planar = h1_structure(build_config_space(parse_diagram("1 1")));
  CHECK(planar.kernel_mod_odd == AbelianGroup{1, {}});
  CHECK(planar.relative_cap_vanishes);
  const auto nonplanar = h1_structure(build_config_space(parse_diagram("1 2 1 2")));
  CHECK(nonplanar.kernel_mod_odd == AbelianGroup{0, {Integer(2)}});
  CHECK(nonplanar.relative_cap_vanishes);
  for (int m = 1; m <= 3; ++m)
    for (const auto& d : all_diagrams(m)) {
      CAPTURE(d.to_string());
      const auto h = h1_structure(build_config_space(d));
      CHECK(h.relative_cap_vanishes);
      if (irreducible_factors(d).count == 1) {
        const bool is_planar = plane_rotation_system(d).has_value();
        CHECK(h.kernel_mod_odd == (is_planar ? AbelianGroup{1, {}} : AbelianGroup{0, {Integer(2)}}));
      }
    }
}

TEST_CASE("knot diagrams parse, format and reject inconsistent crossings") {
  const auto k = parse_knot_diagram("o1+ 1 2 u2- 1 u1+ o2- 2");
  CHECK(k.diagram.to_string() == "1 2 1 2");
  CHECK(k.passages[3].size() == 1);
  CHECK(k.passages[3][0].over);
  CHECK(parse_knot_diagram(format_knot_diagram(k)).passages == k.passages);
  CHECK(crossing_arcs(k, 1) == std::tuple{2, 3, 1});
  CHECK(crossing_arcs(k, 2) == std::tuple{1, 2, -1});

  CHECK_THROWS_AS(parse_knot_diagram("1 o1+ 2 1 o1+ 2"), ParseError);
  CHECK_THROWS_AS(parse_knot_diagram("1 o1+ 2 1 u1- 2"), ParseError);
  CHECK_THROWS_AS(parse_knot_diagram("1 o1+ 2 1 2"), ParseError);
  CHECK_THROWS_AS(parse_knot_diagram("1 o1+ 2"), ParseError);
}

TEST_CASE("evaluator: constants, zero formulas and crossing-change derivatives") {
  const auto b = build_config_space(parse_diagram("1 2 1 2"));
  const auto& d = b.diagram;
  ArrowFormula f;
  f.arcs = 4;
  f.coefficient.assign(16, 0);
  f.constant = 7;
  CHECK(evaluate_arrow_formula(random_knot_diagram(d, 0, 1), f) == 7);
  f.constant = 0;
  CHECK(evaluate_arrow_formula(random_knot_diagram(d, 6, 2), f) == 0);

  const auto data = manturov_data(d);
  const auto integral = integral_arrow_formula(b, data[0] + data[1]);
  REQUIRE(integral.has_value());
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto k = random_knot_diagram(d, 5, seed);
    for (int id = 1; id <= 5; ++id) {
      const auto [under, over, sign] = crossing_arcs(k, id);
      CAPTURE(seed);
      CAPTURE(id);
      CHECK(crossing_derivative(k, id, *integral) == mpq_class((data[0] + data[1]).at(under, over)));

      for (const auto& v : data) {
        auto w = half_integer_formula(d, v);
        CHECK(crossing_derivative(k, id, w) == mpq_class(v.at(under, over)));
        w.doubled = false;
        CHECK(crossing_derivative(k, id, w) == mpq_class(2 * v.at(under, over)));
      }

      // Twice the integral formula minus the raw doubled one is unchanged by crossing changes.
      auto w = half_integer_formula(d, data[0] + data[1]);
      w.doubled = false;
      auto two_f = *integral;
      for (auto& x : two_f.coefficient) x *= 2;
      const mpq_class before = evaluate_arrow_formula(k, two_f) - evaluate_arrow_formula(k, w);
      const auto switched = crossing_change(k, id);
      const mpq_class after = evaluate_arrow_formula(switched, two_f) - evaluate_arrow_formula(switched, w);
      CHECK(after == before);
    }
  }

  DerivativeData zero;
  zero.arcs = 4;
  const auto h = half_integer_formula(d, zero);
  CHECK(h.doubled);
  CHECK(std::all_of(h.coefficient.begin(), h.coefficient.end(), [](const Integer& x) { return x == 0; }));

  ArrowFormula mismatch;
  mismatch.arcs = 6;
  mismatch.coefficient.assign(36, 0);
  CHECK_THROWS_AS(evaluate_arrow_formula(random_knot_diagram(d, 1, 3), mismatch), std::invalid_argument);
}
