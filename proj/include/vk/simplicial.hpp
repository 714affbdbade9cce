#pragma once

// Finite abstract simplicial complexes, their chain complexes and the
// subcomplexes used by the obstruction computations.

#include "vk/exactalg.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

using Vertex = long;
// Sorted vertex list; the sorted order is the positive orientation.
using Simplex = std::vector<Vertex>;

auto make_simplex(std::vector<Vertex> vs) -> Simplex;
auto disjoint(const Simplex& a, const Simplex& b) -> bool;
auto is_face(const Simplex& face, const Simplex& s) -> bool;
auto simplex_to_string(const Simplex& s) -> std::string;

class SimplicialComplex {
public:
  SimplicialComplex() = default;
  // Closes the facet list under taking faces. Rejects repeated vertices.
  static auto from_facets(const std::vector<Simplex>& facets) -> SimplicialComplex;

  [[nodiscard]] auto dimension() const -> int { return static_cast<int>(by_dim_.size()) - 1; }
  [[nodiscard]] auto empty() const -> bool { return by_dim_.empty(); }
  [[nodiscard]] auto simplices(int d) const -> const std::vector<Simplex>&;
  [[nodiscard]] auto count(int d) const -> std::size_t { return simplices(d).size(); }
  [[nodiscard]] auto index(const Simplex& s) const -> std::optional<std::size_t>;
  [[nodiscard]] auto contains(const Simplex& s) const -> bool { return index(s).has_value(); }
  [[nodiscard]] auto vertices() const -> std::vector<Vertex>;
  [[nodiscard]] auto facets() const -> std::vector<Simplex>;
  // All simplices ordered by dimension, then lexicographically.
  [[nodiscard]] auto all_simplices() const -> std::vector<Simplex>;
  [[nodiscard]] auto max_vertex() const -> Vertex;

  auto operator==(const SimplicialComplex& other) const -> bool { return by_dim_ == other.by_dim_; }

private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

// Text format: one facet per line, whitespace separated integer labels,
// '#' starts a comment.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
auto parse_complex(const std::string& text) -> SimplicialComplex;
auto format_complex(const SimplicialComplex& k) -> std::string;

// Chain complex of free Z-modules. boundary[d] maps degree d to degree d-1;
// boundary[0] is the zero map to nothing.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundary;

  [[nodiscard]] auto top() const -> int { return static_cast<int>(ranks.size()) - 1; }
  [[nodiscard]] auto rank_at(int d) const -> std::size_t;
  // Boundary out of degree d as a rank_at(d-1) x rank_at(d) matrix (zero outside the range).
  [[nodiscard]] auto d(int deg) const -> IntMatrix;
  // Coboundary from degree deg to deg+1.
  [[nodiscard]] auto delta(int deg) const -> IntMatrix { return d(deg + 1).transpose(); }
};

auto chain_complex(const SimplicialComplex& k) -> ChainComplex;
// Chains of k modulo chains of the subcomplex l; basis = simplices of k not in l.
auto relative_chain_complex(const SimplicialComplex& k, const SimplicialComplex& l) -> ChainComplex;

enum class Coefficients { Integers, Mod2 };

// Groups over Z/2 are reported as (Z/2)^r, i.e. torsion {2,...,2}.
auto homology(const ChainComplex& c, int d, Coefficients coeff = Coefficients::Integers) -> AbelianGroup;
auto cohomology(const ChainComplex& c, int d, Coefficients coeff = Coefficients::Integers) -> AbelianGroup;
auto homology_all(const ChainComplex& c, Coefficients coeff = Coefficients::Integers) -> std::vector<AbelianGroup>;
auto cohomology_all(const ChainComplex& c, Coefficients coeff = Coefficients::Integers) -> std::vector<AbelianGroup>;

auto homology(const SimplicialComplex& k, int d, Coefficients coeff = Coefficients::Integers) -> AbelianGroup;
auto cohomology(const SimplicialComplex& k, int d, Coefficients coeff = Coefficients::Integers) -> AbelianGroup;
// Reduced groups; the empty complex has reduced (co)homology Z in degree -1.
auto reduced_homology(const SimplicialComplex& k, int d) -> AbelianGroup;
auto reduced_cohomology(const SimplicialComplex& k, int d) -> AbelianGroup;
auto relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& l, int d) -> AbelianGroup;

auto link(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex;
auto star(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex;
// Subcomplex of simplices sharing no vertex with s.
auto disjoint_complement(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex;
auto disjoint_complement(const SimplicialComplex& k, const SimplicialComplex& sub) -> SimplicialComplex;
auto full_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& vs) -> SimplicialComplex;

// Barycentric subdivision; the barycenter of the i-th simplex of
// k.all_simplices() gets label i.
auto barycentric_subdivision(const SimplicialComplex& k) -> SimplicialComplex;
// Subcomplex of the barycentric subdivision spanned by barycenters of
// simplices not containing s: a deformation retract of |k| minus an interior
// point of s.
auto puncture_complement(const SimplicialComplex& k, const Simplex& s) -> SimplicialComplex;

auto cone(const SimplicialComplex& k, Vertex apex) -> SimplicialComplex;
auto cone(const SimplicialComplex& k) -> SimplicialComplex; // apex = max label + 1
auto join(const SimplicialComplex& a, const SimplicialComplex& b) -> SimplicialComplex;
// n-skeleton of the N-simplex on vertices 1..N+1.
auto skeleton(int N, int n) -> SimplicialComplex;
auto complex_union(const SimplicialComplex& a, const SimplicialComplex& b) -> SimplicialComplex;

// Graph helpers for 1-dimensional complexes.
auto complete_graph(int n) -> SimplicialComplex;
auto complete_bipartite(int a, int b) -> SimplicialComplex;

} // namespace vk
