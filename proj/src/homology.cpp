#include "vk/simplicial.hpp"

#include <algorithm>

namespace vk {

auto ChainComplex::rank_at(int deg) const -> std::size_t {
  if (deg < 0 || deg > top()) return 0;
  return ranks[static_cast<std::size_t>(deg)];
}

auto ChainComplex::d(int deg) const -> IntMatrix {
  if (deg <= 0 || deg > top()) return IntMatrix(rank_at(deg - 1), rank_at(deg));
  return boundary[static_cast<std::size_t>(deg)];
}

namespace {

auto boundary_of(const Simplex& s, const std::function<std::optional<std::size_t>(const Simplex&)>& idx,
                 std::size_t col, std::vector<Triplet>& out) {
  if (s.size() < 2) return;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<long>(i));
    if (auto r = idx(f)) out.push_back(Triplet{*r, col, Integer(i % 2 == 0 ? 1 : -1)});
  }
}

struct Reduced {
  std::size_t rank = 0;
  IntVector invariants;
};

auto reduce(const IntMatrix& m, Coefficients coeff) -> Reduced {
  Reduced r;
  if (coeff == Coefficients::Mod2) {
    r.rank = rank_mod2(m);
  } else {
    r.invariants = smith_invariants(m);
    r.rank = r.invariants.size();
  }
  return r;
}

auto group(std::size_t dim, Coefficients coeff, const IntVector& torsion) -> AbelianGroup {
  if (coeff == Coefficients::Mod2) return AbelianGroup{0, IntVector(dim, Integer(2))};
  return AbelianGroup::from_diagonal(dim, torsion);
}

auto all_groups(const ChainComplex& c, Coefficients coeff, bool co) -> std::vector<AbelianGroup> {
  const int top = c.top();
  std::vector<Reduced> red(static_cast<std::size_t>(top + 2));
  for (int d = 1; d <= top; ++d) red[static_cast<std::size_t>(d)] = reduce(c.d(d), coeff);
  std::vector<AbelianGroup> out;
  for (int d = 0; d <= top; ++d) {
    const std::size_t in = red[static_cast<std::size_t>(d)].rank;
    const std::size_t next = red[static_cast<std::size_t>(d + 1)].rank;
    const std::size_t free = c.rank_at(d) - in - next;
    const auto& tors = co ? red[static_cast<std::size_t>(d)].invariants : red[static_cast<std::size_t>(d + 1)].invariants;
    out.push_back(group(free, coeff, tors));
  }
  return out;
}

auto single_group(const ChainComplex& c, int d, Coefficients coeff, bool co) -> AbelianGroup {
  if (d < 0 || d > c.top()) return {};
  const auto in = reduce(c.d(d), coeff);
  const auto next = reduce(c.d(d + 1), coeff);
  const std::size_t free = c.rank_at(d) - in.rank - next.rank;
  return group(free, coeff, co ? in.invariants : next.invariants);
}

auto lower_free(AbelianGroup g) -> AbelianGroup {
  if (g.free_rank > 0) {
    --g.free_rank;
  } else if (!g.torsion.empty() && g.torsion.front() == 2) {
    // Mod 2 groups are stored as torsion.
    g.torsion.erase(g.torsion.begin());
  }
  return g;
}

} // namespace

auto chain_complex(const SimplicialComplex& k) -> ChainComplex {
  ChainComplex c;
  const int top = k.dimension();
  for (int d = 0; d <= top; ++d) c.ranks.push_back(k.count(d));
  c.boundary.emplace_back(0, c.rank_at(0));
  auto idx = [&](const Simplex& s) { return k.index(s); };
  for (int d = 1; d <= top; ++d) {
    std::vector<Triplet> ts;
    const auto& layer = k.simplices(d);
    for (std::size_t j = 0; j < layer.size(); ++j) boundary_of(layer[j], idx, j, ts);
    c.boundary.push_back(IntMatrix::from_triplets(c.rank_at(d - 1), c.rank_at(d), ts));
  }
  return c;
}

auto relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l) -> ChainComplex {
  ChainComplex c;
  const int top = k.dimension();
  std::vector<std::map<Simplex, std::size_t>> pos(static_cast<std::size_t>(std::max(top + 1, 0)));
  std::vector<std::vector<Simplex>> basis(pos.size());
  for (int d = 0; d <= top; ++d) {
    for (const auto& s : k.simplices(d))
      if (!l.contains(s)) {
        pos[static_cast<std::size_t>(d)].emplace(s, basis[static_cast<std::size_t>(d)].size());
        basis[static_cast<std::size_t>(d)].push_back(s);
      }
    c.ranks.push_back(basis[static_cast<std::size_t>(d)].size());
  }
  if (top >= 0) c.boundary.emplace_back(0, c.rank_at(0));
  for (int d = 1; d <= top; ++d) {
    const auto& below = pos[static_cast<std::size_t>(d - 1)];
    auto idx = [&](const Simplex& s) -> std::optional<std::size_t> {
      auto it = below.find(s);
      if (it == below.end()) return std::nullopt;
      return it->second;
    };
    std::vector<Triplet> ts;
    const auto& layer = basis[static_cast<std::size_t>(d)];
    for (std::size_t j = 0; j < layer.size(); ++j) boundary_of(layer[j], idx, j, ts);
    c.boundary.push_back(IntMatrix::from_triplets(c.rank_at(d - 1), c.rank_at(d), ts));
  }
  return c;
}

auto homology(const ChainComplex& c, int d, Coefficients coeff) -> AbelianGroup {
  return single_group(c, d, coeff, false);
}

auto cohomology(const ChainComplex& c, int d, Coefficients coeff) -> AbelianGroup {
  return single_group(c, d, coeff, true);
}

auto homology_all(const ChainComplex& c, Coefficients coeff) -> std::vector<AbelianGroup> {
  return all_groups(c, coeff, false);
}

auto cohomology_all(const ChainComplex& c, Coefficients coeff) -> std::vector<AbelianGroup> {
  return all_groups(c, coeff, true);
}

auto homology(const SimplicialComplex& k, int d, Coefficients coeff) -> AbelianGroup {
  return homology(chain_complex(k), d, coeff);
}

auto cohomology(const SimplicialComplex& k, int d, Coefficients coeff) -> AbelianGroup {
  return cohomology(chain_complex(k), d, coeff);
}

auto reduced_homology(const SimplicialComplex& k, int d) -> AbelianGroup {
  if (k.empty()) return d == -1 ? AbelianGroup{1, {}} : AbelianGroup{};
  if (d == 0) return lower_free(homology(k, 0));
  return homology(k, d);
}

auto reduced_cohomology(const SimplicialComplex& k, int d) -> AbelianGroup {
  if (k.empty()) return d == -1 ? AbelianGroup{1, {}} : AbelianGroup{};
  if (d == 0) return lower_free(cohomology(k, 0));
  return cohomology(k, d);
}

auto relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& l, int d) -> AbelianGroup {
  return cohomology(relative_chain_complex(k, l), d);
}

} // namespace vk
