#include "doctest.h"

#include "vk/obstructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace vk;

namespace {

auto relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& m) -> SimplicialComplex {
  std::vector<Simplex> fs;
  for (const auto& f : k.facets()) {
    Simplex g;
    for (auto v : f) g.push_back(m.at(v));
    fs.push_back(make_simplex(g));
  }
  return SimplicialComplex::from_facets(fs);
}

auto subdivide_edge(const SimplicialComplex& g, const Simplex& e) -> SimplicialComplex {
  const Vertex mid = g.max_vertex() + 1;
  std::vector<Simplex> fs;
  for (const auto& f : g.facets())
    if (f != e) fs.push_back(f);
  fs.push_back(make_simplex({e[0], mid}));
  fs.push_back(make_simplex({e[1], mid}));
  return SimplicialComplex::from_facets(fs);
}

auto random_tree(int n, std::mt19937& rng) -> SimplicialComplex {
  std::vector<Simplex> es;
  for (Vertex v = 2; v <= n; ++v) es.push_back({static_cast<Vertex>(1 + rng() % static_cast<unsigned>(v - 1)), v});
  return SimplicialComplex::from_facets(es);
}

auto graph_from_mask(int n, unsigned mask) -> SimplicialComplex {
  std::vector<Simplex> fs;
  for (Vertex v = 1; v <= n; ++v) fs.push_back({v});
  int bit = 0;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b, ++bit)
      if (mask >> bit & 1U) fs.push_back({a, b});
  return SimplicialComplex::from_facets(fs);
}

auto random_points(const SimplicialComplex& k, int dim, std::mt19937& rng) -> std::map<Vertex, std::vector<Rational>> {
  std::uniform_int_distribution<int> coord(-30, 30);
  std::map<Vertex, std::vector<Rational>> out;
  for (auto v : k.vertices()) {
    std::vector<Rational> x;
    for (int i = 0; i < dim; ++i) x.emplace_back(coord(rng));
    out.emplace(v, x);
  }
  return out;
}

auto difference(TwistedClass a, const TwistedClass& b) -> TwistedClass {
  for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] -= b.values[i];
  return a;
}

} // namespace

TEST_CASE("moment-curve cocycle matches the geometric count at moment-curve points") {
  for (const auto& k : {k5(), k33(), skeleton(6, 2)}) {
    const int n = k.dimension();
    auto p = deleted_product(k);
    auto m = moment_curve_cocycle(p, n);
    CHECK(is_closed(p.complex, m));
    CHECK(m.values == geometric_cocycle(p, n, moment_curve_points(k, n)).values);
  }
  auto p = deleted_product(k5());
  auto m = moment_curve_cocycle(p, 1);
  auto at = [&](const Simplex& a, const Simplex& b) {
    auto full = p.complex.extend(2, m.values, Parity::Untwisted);
    return full[*p.index(a, b)];
  };
  CHECK(abs(at({1, 3}, {2, 4})) == 1);
  CHECK(at({1, 2}, {3, 4}) == 0);
}

TEST_CASE("geometric cocycles at generic points are cohomologous to the moment cocycle") {
  std::mt19937 rng(23);
  for (const auto& k : {k5(), k33()}) {
    auto p = deleted_product(k);
    auto m = moment_curve_cocycle(p, 1);
    int done = 0;
    while (done < 6) {
      TwistedClass g;
      try {
        g = geometric_cocycle(p, 1, random_points(k, 2, rng));
      } catch (const DegenerateInput&) {
        continue;
      }
      CHECK(is_closed(p.complex, g));
      CHECK(is_trivial(p.complex, difference(g, m)));
      ++done;
    }
  }
  auto single = SimplicialComplex::from_facets({{1, 2}, {3, 4}});
  auto p = deleted_product(single);
  std::map<Vertex, std::vector<Rational>> far{{1, {0, 0}}, {2, {1, 0}}, {3, {0, 5}}, {4, {1, 7}}};
  auto g = geometric_cocycle(p, 1, far);
  CHECK(std::all_of(g.values.begin(), g.values.end(), [](const Integer& x) { return x == 0; }));
  std::map<Vertex, std::vector<Rational>> touching{{1, {0, 0}}, {2, {2, 0}}, {3, {1, 0}}, {4, {1, 3}}};
  CHECK_THROWS_AS(geometric_cocycle(p, 1, touching), DegenerateInput);
}

TEST_CASE("van Kampen obstruction of the Kuratowski graphs") {
  for (const auto& k : {k5(), k33()}) {
    auto r = van_kampen(k);
    CHECK(!r.trivial);
    REQUIRE(r.order.has_value());
    CHECK(*r.order == 2);
    CHECK(!r.mod2_trivial);
    CHECK(r.verdict == Verdict::DoesNotEmbed);
    CHECK(h2n_presentation(k) == h2n_direct(k));
  }
  CHECK(h2n_presentation(k5()).to_string() == "Z/2");
}

TEST_CASE("planar graphs and trees have trivial obstruction") {
  std::mt19937 rng(31);
  std::vector<SimplicialComplex> cases{complete_graph(4)};
  for (int i = 0; i < 5; ++i) cases.push_back(random_tree(3 + static_cast<int>(rng() % 6), rng));
  for (unsigned s = 0; s < 5; ++s) cases.push_back(random_planar_graph(6 + static_cast<int>(s), 0.8, s));
  for (const auto& k : cases) {
    auto r = van_kampen(k);
    CHECK(r.trivial);
    CHECK(r.verdict == Verdict::Embeds);
  }
  CHECK(h2n_presentation(random_tree(7, rng)).is_trivial());
}

TEST_CASE("obstruction is invariant under relabelling and edge subdivision") {
  std::mt19937 rng(41);
  for (const auto& k : {k5(), k33(), complete_graph(4)}) {
    const auto base = van_kampen(k);
    auto vs = k.vertices();
    std::vector<Vertex> img(vs.size());
    std::iota(img.begin(), img.end(), 10);
    std::shuffle(img.begin(), img.end(), rng);
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < vs.size(); ++i) m.emplace(vs[i], img[i]);
    auto renamed = van_kampen(relabel(k, m));
    CHECK(renamed.trivial == base.trivial);
    CHECK(renamed.order == base.order);
    auto sub = van_kampen(subdivide_edge(k, k.simplices(1).front()));
    CHECK(sub.trivial == base.trivial);
    CHECK(sub.order == base.order);
  }
}

TEST_CASE("presentation agrees with the direct computation on small graphs") {
  for (unsigned mask = 0; mask < (1U << 10); ++mask) {
    auto g = graph_from_mask(5, mask);
    CHECK(h2n_presentation(g) == h2n_direct(g));
  }
  for (unsigned s = 0; s < 8; ++s) {
    auto k = random_complex(6, 2, 0.5, s);
    CHECK(h2n_presentation(k) == h2n_direct(k));
  }
}

TEST_CASE("order of the obstruction divides two") {
  for (unsigned s = 0; s < 10; ++s) {
    auto k = random_complex(7, 1, 0.6, s);
    auto r = van_kampen(k);
    REQUIRE(r.order.has_value());
    CHECK((*r.order == 1 || *r.order == 2));
  }
}

TEST_CASE("two-dimensional fixtures") {
  auto f = van_kampen(flores(2));
  CHECK(!f.trivial);
  CHECK(!f.mod2_trivial);
  auto s = sarkaria_example();
  CHECK(s.dimension() == 2);
  for (const auto& t : s.all_simplices())
    for (std::size_t i = 0; i < t.size() && t.size() > 1; ++i) {
      auto face = t;
      face.erase(face.begin() + static_cast<long>(i));
      CHECK(s.contains(face));
    }
  auto r = van_kampen(s);
  CHECK(!r.trivial);
  CHECK(r.mod2_trivial);
  CHECK(r.verdict == Verdict::DoesNotEmbed);
  CHECK(van_kampen(skeleton(4, 2)).verdict == Verdict::Unknown);
}

TEST_CASE("panelled cone obstruction") {
  CHECK(*panelled_cone_obstruction(k5()).co_index == 3);
  CHECK(panelled_cone_obstruction(k5()).verdict == Verdict::DoesNotEmbed);
  CHECK(*panelled_cone_obstruction(k33()).co_index == 3);
  auto edge = panelled_cone_obstruction(skeleton(1, 1));
  CHECK(*edge.co_index == 1);
  CHECK(edge.verdict == Verdict::Embeds);
}

TEST_CASE("cycle coning") {
  auto tree = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {2, 4}});
  CHECK(x_plus(tree) == tree);
  auto two = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(x_plus(two).count(2) == 6);
  auto k6 = complete_graph(6);
  CHECK(simple_cycles(k6).size() == 197);
  CHECK(x_plus(k6).count(2) == 60);
  CHECK_THROWS_AS(simple_cycles(k6, 10), CycleCapExceeded);
}

TEST_CASE("linkless obstruction") {
  CHECK(linkless_obstruction(complete_graph(4)).trivial);
  CHECK(!linkless_obstruction(complete_graph(6)).trivial);
  CHECK(!linkless_obstruction(petersen_graph()).trivial);
  for (unsigned s = 0; s < 3; ++s) CHECK(linkless_obstruction(random_planar_graph(6, 0.9, s)).trivial);
}

TEST_CASE("spatial graph embeddings") {
  auto h = hopf_triangles();
  CHECK(parse_embedding(format_embedding(h)).coords == h.coords);
  CHECK(parse_embedding(format_embedding(h)).graph == h.graph);
  CHECK_THROWS_AS(parse_embedding("1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("1 2\n"), ParseError);

  // Planar K4 lifted to a plane has no crossings.
  auto k4 = parse_embedding("1 0 0 0\n2 6 0 0\n3 0 6 0\n4 1 1 0\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  auto c = gauss_projection_class(k4);
  CHECK(std::all_of(c.values.begin(), c.values.end(), [](const Integer& x) { return x == 0; }));

  auto u = unlinked_triangles();
  auto p = deleted_product(h.graph);
  auto ch = gauss_projection_class(h);
  CHECK(is_closed(p.complex, ch));
  // Orient both triangles as cycles; every crossing is counted once from each side.
  auto along = [](const Simplex& e) { return e == Simplex{1, 3} || e == Simplex{4, 6} ? -1 : 1; };
  auto full = p.complex.extend(2, ch.values, Parity::Untwisted);
  Integer total = 0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    const auto& [a, b] = p.pairs[2][i];
    if (a[0] <= 3 && b[0] >= 4) total += along(a) * along(b) * full[i];
  }
  CHECK(abs(total) == 2);
  CHECK(!is_trivial(p.complex, ch));
  CHECK(!isotopy_obstruction(u, h).trivial);
  CHECK(isotopy_obstruction(h, h).trivial);

  auto [f, g] = k5_crossing_change_pair();
  auto fg = isotopy_obstruction(f, g);
  auto gf = isotopy_obstruction(g, f);
  CHECK(!fg.trivial);
  for (std::size_t i = 0; i < fg.klass.values.size(); ++i) CHECK(fg.klass.values[i] == -gf.klass.values[i]);
  CHECK(isotopy_obstruction(f, f).trivial);

  auto bad = parse_embedding("1 0 0 0\n2 2 0 0\n3 1 -1 0\n4 1 1 0\n1 2\n3 4\n");
  CHECK_THROWS_AS(check_general_position(bad), DegenerateInput);
}

TEST_CASE("projection classes of random K5 embeddings are cocycles and agree across projections") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-20, 20);
  auto p = deleted_product(k5());
  for (int trial = 0; trial < 5; ++trial) {
    SpatialGraphEmbedding g{k5(), {}};
    for (Vertex v = 1; v <= 5; ++v) g.coords.emplace(v, std::array<Rational, 3>{coord(rng), coord(rng), coord(rng)});
    try {
      check_general_position(g);
    } catch (const DegenerateInput&) {
      continue;
    }
    auto a = gauss_projection_class(g, 1);
    auto b = gauss_projection_class(g, 99);
    CHECK(is_closed(p.complex, a));
    CHECK(is_trivial(p.complex, difference(a, b)));
  }
}

TEST_CASE("co-connectivity conditions") {
  auto sphere3 = skeleton(4, 3);
  auto r = coconnectivity_check(sphere3, 1);
  CHECK(r.hypothesis);
  CHECK(r.i_k);
  CHECK(r.ii_k_minus_1);
  CHECK(!r.embeds_in.has_value());
  CHECK(r.non_manifold_locus.empty());

  auto circle = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
  CHECK(!coconnectivity_check(circle, 1).i_k);

  auto two = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  auto c = coconnectivity_check(cone(two), 1);
  auto apex = std::find_if(c.star_table.begin(), c.star_table.end(), [](const StarCondition& s) { return s.simplex == Simplex{7}; });
  REQUIRE(apex != c.star_table.end());
  CHECK(!apex->holds);
}

TEST_CASE("homology manifold locus") {
  CHECK(homology_manifold_locus(skeleton(3, 2)).empty());
  auto wedge = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
  CHECK(homology_manifold_locus(wedge) == std::vector<Simplex>{{1}});
  auto locus = homology_manifold_locus(skeleton(6, 2));
  CHECK(locus.size() == 7 + 21);
  for (const auto& s : locus) CHECK(s.size() <= 2);
}
