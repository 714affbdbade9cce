#include "doctest.h"

#include "smith_checks.hpp"
#include "vk/equivariant.hpp"

#include <random>

using namespace vk;

namespace {

// Boundary of the (n+1)-dimensional cross-polytope, vertex 2i+s is s-th sign of axis i.
// Negating every vertex keeps the sorted order, so the antipodal map has sign +1 on cells.
auto antipodal_sphere(int n) -> CellComplex {
  std::vector<Simplex> facets;
  const int axes = n + 1;
  for (int mask = 0; mask < (1 << axes); ++mask) {
    Simplex s;
    for (int i = 0; i < axes; ++i) s.push_back(2 * i + ((mask >> i) & 1));
    facets.push_back(s);
  }
  auto k = SimplicialComplex::from_facets(facets);
  auto cc = chain_complex(k);
  CellComplex c;
  for (int d = 0; d <= k.dimension(); ++d) {
    std::vector<std::string> labels;
    std::vector<SignedCell> inv;
    for (const auto& s : k.simplices(d)) {
      labels.push_back(simplex_to_string(s));
      Simplex t;
      for (auto v : s) t.push_back(v ^ 1);
      inv.push_back(SignedCell{*k.index(t), 1});
    }
    c.labels.push_back(labels);
    c.involution.push_back(inv);
    c.boundary.push_back(cc.d(d));
  }
  return c;
}

auto module(std::size_t rank, const std::vector<std::vector<long>>& action) -> Z2Module {
  return Z2Module{rank, IntMatrix::from_dense(action), IntMatrix(rank, 0)};
}

} // namespace

TEST_CASE("antipodal spheres have co-index equal to their dimension") {
  for (int n = 0; n <= 4; ++n) {
    auto c = antipodal_sphere(n);
    CHECK(c.involution_squares_to_identity());
    CHECK(c.involution_commutes_with_boundary());
    CHECK(c.involution_is_free());
    EquivariantComplex e(c);
    CHECK(co_index(e) == n);
    CHECK(yang_index(e) == n);
    // Quotient is RP^n: top cohomology with the parity of e^n.
    const auto top = twisted_cohomology(e, n, power_parity(n));
    CHECK(top.to_string() == (n == 0 ? "Z" : "Z/2"));
    CHECK(twisted_cohomology(e, n, flip(power_parity(n))).to_string() == "Z");
  }
}

TEST_CASE("small graphs") {
  auto tri = EquivariantComplex(deleted_product(skeleton(2, 1)).complex);
  CHECK(twisted_cohomology(tri, 1, Parity::Untwisted).to_string() == "Z");
  CHECK(twisted_cohomology(tri, 1, Parity::Twisted).to_string() == "Z/2");
  CHECK(co_index(tri) == 1);
  CHECK(co_index(deleted_product(complete_graph(4)).complex) == 1);
}

TEST_CASE("deleted products of K5 and K3,3") {
  for (const auto& [k, genus] : {std::pair{complete_graph(5), 6}, std::pair{complete_bipartite(3, 3), 4}}) {
    auto p = deleted_product(k);
    const auto& c = p.complex.cells();
    CHECK(c.involution_is_free());
    CHECK(c.involution_commutes_with_boundary());
    auto chains = c.chains();
    CHECK(homology(chains, 1).to_string() == "Z^" + std::to_string(2 * genus));
    CHECK(homology(chains, 2).to_string() == "Z");
    CHECK(twisted_cohomology(p.complex, 2, Parity::Untwisted).to_string() == "Z/2");
    CHECK(co_index(p.complex) == 2);
    auto e2 = euler_power(p.complex, 2);
    CHECK(is_closed(p.complex, e2));
    CHECK(*class_order(p.complex, e2) == 2);
    CHECK(!is_trivial(p.complex, euler_power(p.complex, 2, true)));
  }
}

TEST_CASE("euler classes do not depend on the choice of representatives") {
  for (const auto& k : {complete_graph(5), skeleton(4, 2), complete_graph(4)}) {
    auto base = deleted_product(k).complex;
    EquivariantComplex other(base.cells(), checks::swapped_reps(base.cells()));
    CHECK(co_index(base) == co_index(other));
    for (int d = 0; d <= base.top(); ++d)
      for (auto p : {Parity::Untwisted, Parity::Twisted}) {
        CHECK(twisted_cohomology(base, d, p) == twisted_cohomology(other, d, p));
        CHECK(twisted_homology(base, d, p) == twisted_homology(other, d, p));
      }
  }
}

TEST_CASE("connecting maps send coboundaries to coboundaries and cocycles to cocycles") {
  auto e = deleted_product(skeleton(5, 2)).complex;
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto p = rng() % 2 == 0 ? Parity::Untwisted : Parity::Twisted;
    IntVector x(e.orbit_count(d - 1));
    for (auto& v : x) v = static_cast<int>(rng() % 5) - 2;
    TwistedClass c{Direction::Cohomology, d, p, false, e.quotient(p).delta(d - 1).apply(x)};
    REQUIRE(is_closed(e, c));
    auto next = smith_connecting_cohomology(e, c);
    CHECK(next.parity == flip(p));
    CHECK(next.degree == d + 1);
    CHECK(is_closed(e, next));
    CHECK(is_trivial(e, next));
  }
  for (int k = 0; k <= 4; ++k) CHECK(is_closed(e, euler_power(e, k)));
}

TEST_CASE("homology connecting map on the antipodal sphere") {
  // The fundamental class of S^n restricts to a generator; n steps reach a point class.
  for (int n = 1; n <= 3; ++n) {
    EquivariantComplex e(antipodal_sphere(n));
    const auto p = power_parity(n + 1);
    auto g = twisted_homology(e, n, p);
    CHECK(g.to_string() == "Z");
    // The orientation cycle: sum of facets with simplicial orientation signs.
    auto ker = integer_kernel(e.cells().d(n));
    REQUIRE(ker.size() == 1);
    TwistedClass c{Direction::Homology, n, p, false, e.restrict(n, ker[0])};
    REQUIRE(is_closed(e, c));
    for (int step = 0; step < n; ++step) {
      c = smith_connecting_homology(e, c);
      CHECK(is_closed(e, c));
    }
    CHECK(c.degree == 0);
    CHECK(!is_trivial(e, c));
  }
}

TEST_CASE("group cohomology of small modules") {
  auto trivial = z2_group_cohomology(module(1, {{1}}));
  CHECK(trivial.h0.to_string() == "Z");
  CHECK(trivial.h1.is_trivial());
  auto sign = z2_group_cohomology(module(1, {{-1}}));
  CHECK(sign.h0.is_trivial());
  CHECK(sign.h1.to_string() == "Z/2");
  auto regular = z2_group_cohomology(module(2, {{0, 1}, {1, 0}}));
  CHECK(regular.h0.to_string() == "Z");
  CHECK(regular.h1.is_trivial());
  CHECK(z2_group_homology_h1(module(1, {{1}})).to_string() == "Z/2");
  CHECK(z2_group_homology_h1(module(1, {{-1}})).is_trivial());
  CHECK(z2_group_homology_h1(module(2, {{0, 1}, {1, 0}})).is_trivial());
}

TEST_CASE("involution on homology of antipodal spheres") {
  for (int n = 1; n <= 3; ++n) {
    auto m = involution_on_homology(antipodal_sphere(n), n);
    REQUIRE(m.rank == 1);
    // Antipodal map has degree (-1)^{n+1}.
    CHECK(m.action.at(0, 0) == ((n % 2 == 1) ? 1 : -1));
  }
}

TEST_CASE("relative deleted product of a subcomplex") {
  auto y = skeleton(4, 1);
  auto k = SimplicialComplex::from_facets({{1, 2}, {3, 4}});
  auto p = relative_deleted_product(k, y);
  const auto& c = p.complex.cells();
  CHECK(c.involution_commutes_with_boundary());
  CHECK(c.involution_is_free());
  CHECK(p.index({1, 2}, {3, 4}).has_value());
  CHECK(p.index({1, 2}, {3, 5}).has_value());
  CHECK(!p.index({1, 5}, {2, 3}).has_value());
  CHECK(p.index({2, 5}, {3, 4}).has_value());
}

TEST_CASE("Smith cohomology sequences are exact and independent of representatives") {
  std::vector<EquivariantComplex> fixtures{EquivariantComplex(antipodal_sphere(2)), EquivariantComplex(antipodal_sphere(3)),
                                           deleted_product(complete_graph(5)).complex,
                                           deleted_product(complete_bipartite(3, 3)).complex,
                                           deleted_product(skeleton(4, 2)).complex};
  unsigned seed = 5;
  for (const auto& e : fixtures)
    for (int d = 0; d <= e.top(); ++d)
      for (auto p : {Parity::Untwisted, Parity::Twisted}) {
        CAPTURE(d);
        CHECK(checks::smith_exactness(e, d, p) == "");
        CHECK(checks::representative_independence(e, d, p, seed++));
      }
}
