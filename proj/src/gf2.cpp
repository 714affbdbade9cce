#include "vk/exactalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vk {

namespace {

using Bits = std::vector<std::uint64_t>;

auto words(std::size_t n) -> std::size_t { return (n + 63) / 64; }

auto test(const Bits& b, std::size_t i) -> bool { return (b[i / 64] >> (i % 64)) & 1U; }

// XOR basis of a column space; each vector is keyed by its lowest set row.
class Gf2Basis {
public:
  explicit Gf2Basis(std::size_t n) : n_(n), by_pivot_(n, static_cast<std::size_t>(-1)) {}

  auto insert(const Bits& v) -> bool {
    Bits r = v;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!test(r, i)) continue;
      if (by_pivot_[i] == static_cast<std::size_t>(-1)) {
        by_pivot_[i] = vecs_.size();
        vecs_.push_back(std::move(r));
        return true;
      }
      const auto& b = vecs_[by_pivot_[i]];
      for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= b[w];
    }
    return false;
  }

  auto contains(const Bits& v) const -> bool {
    Bits r = v;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!test(r, i)) continue;
      if (by_pivot_[i] == static_cast<std::size_t>(-1)) return false;
      const auto& b = vecs_[by_pivot_[i]];
      for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= b[w];
    }
    return true;
  }

  [[nodiscard]] auto size() const -> std::size_t { return vecs_.size(); }

private:
  std::size_t n_;
  std::vector<std::size_t> by_pivot_;
  std::vector<Bits> vecs_;
};

auto columns_mod2(const IntMatrix& a) -> std::vector<Bits> {
  std::vector<Bits> cols(a.cols(), Bits(words(a.rows()), 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row(i))
      if (mpz_odd_p(e.value.get_mpz_t())) cols[e.col][i / 64] |= std::uint64_t{1} << (i % 64);
  return cols;
}

} // namespace

auto rank_mod2(const IntMatrix& a) -> std::size_t {
  Gf2Basis basis(a.rows());
  for (const auto& c : columns_mod2(a)) basis.insert(c);
  return basis.size();
}

auto in_column_span_mod2(const IntMatrix& a, const IntVector& b) -> bool {
  if (b.size() != a.rows()) throw std::invalid_argument("vector length mismatch");
  Gf2Basis basis(a.rows());
  for (const auto& c : columns_mod2(a)) basis.insert(c);
  Bits v(words(a.rows()), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (mpz_odd_p(b[i].get_mpz_t())) v[i / 64] |= std::uint64_t{1} << (i % 64);
  return basis.contains(v);
}

} // namespace vk
