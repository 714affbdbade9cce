#include "vk/obstructions.hpp"

#include <algorithm>

namespace vk {

namespace {

auto is_homology_sphere(const SimplicialComplex& l, int dim) -> bool {
  const int top = std::max(l.dimension(), dim);
  for (int i = -1; i <= top; ++i) {
    const auto g = reduced_homology(l, i);
    if (i == dim ? !(g.free_rank == 1 && g.torsion.empty()) : !g.is_trivial()) return false;
  }
  return true;
}

// H^j isomorphic to H_d(pt): Z for d = 0, trivial otherwise.
auto matches_point(const AbelianGroup& g, int d) -> bool {
  return d == 0 ? g.free_rank == 1 && g.torsion.empty() : g.is_trivial();
}

} // namespace

auto homology_manifold_locus(const SimplicialComplex& k) -> std::vector<Simplex> {
  const int n = k.dimension();
  std::vector<Simplex> out;
  for (const auto& s : k.all_simplices()) {
    const int dim = static_cast<int>(s.size()) - 1;
    if (!is_homology_sphere(link(k, s), n - dim - 1)) out.push_back(s);
  }
  return out;
}

auto coconnectivity_check(const SimplicialComplex& k, int kk) -> CoconnectivityReport {
  if (kk < 0) throw std::invalid_argument("k must be nonnegative");
  CoconnectivityReport r;
  r.n = k.dimension();
  r.k = kk;
  const int n = r.n;
  const auto all = k.all_simplices();
  const auto sd = barycentric_subdivision(k);

  r.hypothesis = true;
  r.ii_k_minus_1 = true;
  for (const auto& s : all) {
    const auto punctured = puncture_complement(k, s);
    for (int d = 0; d <= kk && r.hypothesis; ++d)
      if (!reduced_cohomology(punctured, n - d).is_trivial()) r.hypothesis = false;
    for (int d = 0; d <= kk - 1 && r.ii_k_minus_1; ++d)
      if (!matches_point(relative_cohomology(sd, punctured, n - d), d)) r.ii_k_minus_1 = false;
  }

  r.i_k = true;
  for (int d = 0; d <= kk; ++d)
    if (!matches_point(cohomology(k, n - d), d)) r.i_k = false;

  for (const auto& s : all) {
    StarCondition c{s, n - static_cast<int>(s.size()), true};
    const auto l = link(k, s);
    for (int j = c.link_dimension - 1; j >= c.link_dimension - kk; --j)
      if (j >= -1 && !reduced_cohomology(l, j).is_trivial()) c.holds = false;
    r.star_table.push_back(std::move(c));
  }

  if (r.hypothesis && 2 * kk < n - 3) r.embeds_in = 2 * n - kk;

  r.non_manifold_locus = homology_manifold_locus(k);
  if (r.ii_k_minus_1)
    for (const auto& s : r.non_manifold_locus)
      if (static_cast<int>(s.size()) - 1 > n - (2 * kk + 1)) r.locus_bound_holds = false;
  return r;
}

} // namespace vk
