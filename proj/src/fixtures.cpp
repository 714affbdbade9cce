#include "vk/obstructions.hpp"

#include <random>

namespace vk {

auto k5() -> SimplicialComplex { return complete_graph(5); }

auto k33() -> SimplicialComplex { return complete_bipartite(3, 3); }

auto petersen_graph() -> SimplicialComplex {
  std::vector<Simplex> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back(make_simplex({1 + i, 1 + (i + 1) % 5}));
    es.push_back(make_simplex({6 + i, 6 + (i + 2) % 5}));
    es.push_back(make_simplex({1 + i, 6 + i}));
  }
  return SimplicialComplex::from_facets(es);
}

auto flores(int n) -> SimplicialComplex { return skeleton(2 * n + 2, n); }

// Triangle 5 6 7 is replaced by a collar onto the circle s0 s1 s2, a mapping cylinder
// of the double cover from the hexagon a0..a5 onto that circle, and a disk coning the hexagon.
auto sarkaria_example() -> SimplicialComplex {
  std::vector<Simplex> facets;
  const auto base = skeleton(6, 2);
  for (const auto& t : base.simplices(2))
    if (t != Simplex{5, 6, 7}) facets.push_back(t);
  const Vertex outer[3] = {5, 6, 7};
  const Vertex s[3] = {8, 9, 10};
  auto a = [](int j) -> Vertex { return 11 + ((j % 6) + 6) % 6; };
  const Vertex apex = 17;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    facets.push_back(make_simplex({outer[i], outer[j], s[j]}));
    facets.push_back(make_simplex({outer[i], s[i], s[j]}));
  }
  for (int j = 0; j < 6; ++j) {
    facets.push_back(make_simplex({a(j), a(j + 1), s[(j + 1) % 3]}));
    facets.push_back(make_simplex({a(j), s[j % 3], s[(j + 1) % 3]}));
    facets.push_back(make_simplex({apex, a(j), a(j + 1)}));
  }
  return SimplicialComplex::from_facets(facets);
}

// Stacked triangulation on 1..vertices with each edge kept with probability `keep`.
auto random_planar_graph(int vertices, double keep, unsigned seed) -> SimplicialComplex {
  if (vertices < 3) throw std::invalid_argument("need at least three vertices");
  std::mt19937 rng(seed);
  std::vector<std::array<Vertex, 3>> faces{{1, 2, 3}};
  std::vector<Simplex> edges{{1, 2}, {1, 3}, {2, 3}};
  for (Vertex v = 4; v <= vertices; ++v) {
    const auto at = rng() % faces.size();
    const auto f = faces[at];
    faces.erase(faces.begin() + static_cast<long>(at));
    for (int i = 0; i < 3; ++i) {
      edges.push_back(make_simplex({f[static_cast<std::size_t>(i)], v}));
      faces.push_back({f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>((i + 1) % 3)], v});
    }
  }
  std::bernoulli_distribution coin(keep);
  std::vector<Simplex> facets;
  for (Vertex v = 1; v <= vertices; ++v) facets.push_back({v});
  for (const auto& e : edges)
    if (coin(rng)) facets.push_back(e);
  return SimplicialComplex::from_facets(facets);
}

auto random_complex(int vertices, int n, double density, unsigned seed) -> SimplicialComplex {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(density);
  const auto all = skeleton(vertices - 1, n).simplices(n);
  std::vector<Simplex> facets;
  for (const auto& s : all)
    if (coin(rng)) facets.push_back(s);
  if (facets.empty()) facets.push_back(all[rng() % all.size()]);
  return SimplicialComplex::from_facets(facets);
}

auto fixture_names() -> std::vector<std::string> {
  return {"k5", "k33", "petersen", "flores-1", "flores-2", "sarkaria"};
}

auto fixture(const std::string& name) -> SimplicialComplex {
  if (name == "k5") return k5();
  if (name == "k33") return k33();
  if (name == "petersen") return petersen_graph();
  if (name == "sarkaria") return sarkaria_example();
  if (name.rfind("flores-", 0) == 0) {
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(name.substr(7), &used);
    } catch (const std::exception&) {
    }
    if (n >= 0 && n <= 4 && used == name.size() - 7) return flores(n);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

namespace {

auto embedding(const SimplicialComplex& g, const std::vector<std::array<long, 3>>& xs) -> SpatialGraphEmbedding {
  SpatialGraphEmbedding e{g, {}};
  for (std::size_t i = 0; i < xs.size(); ++i)
    e.coords.emplace(static_cast<Vertex>(i + 1), std::array<Rational, 3>{xs[i][0], xs[i][1], xs[i][2]});
  return e;
}

auto crossing_signature(const SpatialGraphEmbedding& g) -> std::vector<int> {
  const auto p = deleted_product(g.graph);
  auto c = gauss_projection_class(g, p, Projection{});
  std::vector<int> out;
  for (const auto& v : c.values) out.push_back(static_cast<int>(v.get_si()));
  return out;
}

} // namespace

// Convex pentagon in the plane: the five diagonals cross pairwise disjointly. Vertex heights
// are searched for two assignments whose vertical projections differ at exactly one crossing.
auto k5_crossing_change_pair() -> std::pair<SpatialGraphEmbedding, SpatialGraphEmbedding> {
  const long px[5] = {0, 10, 6, -6, -10};
  const long py[5] = {10, 3, -8, -8, 3};
  std::vector<std::pair<std::vector<int>, SpatialGraphEmbedding>> seen;
  for (int code = 0; code < 625; ++code) {
    std::vector<std::array<long, 3>> xs;
    int c = code;
    for (int i = 0; i < 5; ++i, c /= 5) xs.push_back({px[i], py[i], c % 5});
    auto g = embedding(k5(), xs);
    std::vector<int> sig;
    try {
      check_general_position(g);
      sig = crossing_signature(g);
    } catch (const DegenerateInput&) {
      continue;
    }
    for (const auto& [other, h] : seen) {
      int diff = 0;
      for (std::size_t i = 0; i < sig.size(); ++i) diff += sig[i] != other[i];
      if (diff == 1) return {h, g};
    }
    seen.emplace_back(sig, g);
  }
  throw std::logic_error("no crossing-change pair found");
}

auto unlinked_triangles() -> SpatialGraphEmbedding {
  return embedding(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}),
                   {{0, 0, 0}, {6, 0, 0}, {0, 6, 0}, {20, 1, -2}, {21, 1, 2}, {20, -5, 1}});
}

// The second triangle pierces the first once, at (3/2, 1, 0).
auto hopf_triangles() -> SpatialGraphEmbedding {
  return embedding(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}),
                   {{0, 0, 0}, {6, 0, 0}, {0, 6, 0}, {1, 1, -2}, {2, 1, 2}, {1, -5, 1}});
}

} // namespace vk
