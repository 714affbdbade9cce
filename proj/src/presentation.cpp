#include "vk/obstructions.hpp"

namespace vk {

// Each slot s holds C^n(K \ N s) modulo coboundaries; top-dimensional cochains are cocycles,
// so the indicator of a disjoint n-simplex t is the generator (s, t).
auto h2n_presentation(const SimplicialComplex& k) -> AbelianGroup {
  const int n = std::max(k.dimension(), 0);
  const auto& tops = k.simplices(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> gen;
  for (std::size_t s = 0; s < tops.size(); ++s)
    for (std::size_t t = 0; t < tops.size(); ++t)
      if (disjoint(tops[s], tops[t])) gen.emplace(std::pair{s, t}, gen.size());

  std::vector<Triplet> ts;
  std::size_t col = 0;
  for (std::size_t s = 0; s < tops.size(); ++s) {
    const auto rest = disjoint_complement(k, tops[s]);
    if (rest.dimension() < n || n == 0) continue;
    const auto boundary = chain_complex(rest).d(n);
    const auto& faces = rest.simplices(n - 1);
    const auto& cells = rest.simplices(n);
    for (std::size_t f = 0; f < faces.size(); ++f, ++col)
      for (const auto& e : boundary.row(f)) ts.push_back(Triplet{gen.at({s, *k.index(cells[e.col])}), col, e.value});
  }
  const Integer sign = n % 2 == 0 ? 1 : -1;
  for (std::size_t s = 0; s < tops.size(); ++s)
    for (std::size_t t = s + 1; t < tops.size(); ++t) {
      if (!disjoint(tops[s], tops[t])) continue;
      ts.push_back(Triplet{gen.at({t, s}), col, Integer(1)});
      ts.push_back(Triplet{gen.at({s, t}), col, Integer(-sign)});
      ++col;
    }
  return cokernel(IntMatrix::from_triplets(gen.size(), col, ts));
}

} // namespace vk
