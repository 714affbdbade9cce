#include "vk/equivariant.hpp"

#include <algorithm>

namespace vk {

auto ProductComplex::index(const Simplex& a, const Simplex& b) const -> std::optional<std::size_t> {
  const int d = static_cast<int>(a.size() + b.size()) - 2;
  if (d < 0 || d >= static_cast<int>(lookup.size())) return std::nullopt;
  const auto& m = lookup[static_cast<std::size_t>(d)];
  auto it = m.find(CellPair{a, b});
  if (it == m.end()) return std::nullopt;
  return it->second;
}

auto relative_deleted_product(const SimplicialComplex& k, const SimplicialComplex& y) -> ProductComplex {
  ProductComplex out;
  const auto all = y.all_simplices();
  std::vector<std::vector<CellPair>> pairs;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!disjoint(a, b)) continue;
      if (!k.contains(a) && !k.contains(b)) continue;
      const std::size_t d = a.size() + b.size() - 2;
      if (pairs.size() <= d) pairs.resize(d + 1);
      pairs[d].emplace_back(a, b);
    }
  for (auto& layer : pairs) std::sort(layer.begin(), layer.end());
  out.lookup.resize(pairs.size());
  for (std::size_t d = 0; d < pairs.size(); ++d)
    for (std::size_t i = 0; i < pairs[d].size(); ++i) out.lookup[d].emplace(pairs[d][i], i);

  CellComplex c;
  for (std::size_t d = 0; d < pairs.size(); ++d) {
    std::vector<std::string> labels;
    std::vector<SignedCell> inv;
    for (const auto& [a, b] : pairs[d]) {
      labels.push_back(simplex_to_string(a) + "x" + simplex_to_string(b));
      const long da = static_cast<long>(a.size()) - 1;
      const long db = static_cast<long>(b.size()) - 1;
      inv.push_back(SignedCell{out.lookup[d].at(CellPair{b, a}), (da * db) % 2 == 0 ? 1 : -1});
    }
    c.labels.push_back(std::move(labels));
    c.involution.push_back(std::move(inv));
  }
  for (std::size_t d = 0; d < pairs.size(); ++d) {
    if (d == 0) {
      c.boundary.emplace_back(0, pairs[0].size());
      continue;
    }
    std::vector<Triplet> ts;
    const auto& below = out.lookup[d - 1];
    for (std::size_t j = 0; j < pairs[d].size(); ++j) {
      const auto& [a, b] = pairs[d][j];
      if (a.size() > 1)
        for (std::size_t i = 0; i < a.size(); ++i) {
          Simplex f = a;
          f.erase(f.begin() + static_cast<long>(i));
          ts.push_back(Triplet{below.at(CellPair{f, b}), j, Integer(i % 2 == 0 ? 1 : -1)});
        }
      const int sa = (a.size() - 1) % 2 == 0 ? 1 : -1;
      if (b.size() > 1)
        for (std::size_t i = 0; i < b.size(); ++i) {
          Simplex f = b;
          f.erase(f.begin() + static_cast<long>(i));
          ts.push_back(Triplet{below.at(CellPair{a, f}), j, Integer(sa * (i % 2 == 0 ? 1 : -1))});
        }
    }
    c.boundary.push_back(IntMatrix::from_triplets(pairs[d - 1].size(), pairs[d].size(), ts));
  }
  out.pairs = std::move(pairs);
  out.complex = EquivariantComplex(std::move(c));
  return out;
}

auto deleted_product(const SimplicialComplex& k) -> ProductComplex { return relative_deleted_product(k, k); }

} // namespace vk
