#include "vk/obstructions.hpp"

#include <algorithm>
#include <functional>

namespace vk {

auto simple_cycles(const SimplicialComplex& g, std::size_t cap) -> std::vector<std::vector<Simplex>> {
  if (g.dimension() > 1) throw std::invalid_argument("expected a graph");
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : g.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<std::vector<Simplex>> out;
  std::vector<Vertex> path;
  std::map<Vertex, bool> on_path;
  // Cycles are rooted at their smallest vertex and traversed with second vertex < last vertex.
  std::function<void(Vertex, Vertex)> extend = [&](Vertex root, Vertex v) {
    for (auto w : adj[v]) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        std::vector<Simplex> edges;
        for (std::size_t i = 0; i < path.size(); ++i) edges.push_back(make_simplex({path[i], path[(i + 1) % path.size()]}));
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));
        if (out.size() > cap) throw CycleCapExceeded("more than " + std::to_string(cap) + " simple cycles");
        continue;
      }
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(root, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (const auto& [root, nb] : adj) {
    path = {root};
    on_path.clear();
    on_path[root] = true;
    extend(root, root);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

auto x_plus(const SimplicialComplex& g, std::size_t cap) -> SimplicialComplex {
  auto facets = g.facets();
  Vertex apex = g.max_vertex() + 1;
  for (const auto& cycle : simple_cycles(g, cap)) {
    const auto rest = disjoint_complement(g, SimplicialComplex::from_facets(cycle));
    if (rest.empty() || homology(rest, 1).free_rank == 0) continue;
    for (const auto& e : cycle) facets.push_back(make_simplex({e[0], e[1], apex}));
    ++apex;
  }
  return SimplicialComplex::from_facets(facets);
}

auto linkless_obstruction(const SimplicialComplex& g, std::size_t cap) -> ObstructionReport {
  const auto p = relative_deleted_product(g, x_plus(g, cap));
  ObstructionReport r;
  r.ambient = 3;
  r.klass = euler_power(p.complex, 3);
  r.order = class_order(p.complex, r.klass);
  r.trivial = r.order && *r.order == 1;
  r.mod2_trivial = is_trivial(p.complex, reduce_mod2(r.klass));
  r.verdict = r.trivial ? Verdict::Embeds : Verdict::DoesNotEmbed;
  return r;
}

} // namespace vk
