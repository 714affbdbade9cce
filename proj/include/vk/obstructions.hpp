#pragma once

// Embedding obstructions for simplicial complexes: van Kampen classes,
// their presentation through disjoint complements, linkless and panelled
// variants, spatial-graph projections and co-connectivity checks.

#include "vk/equivariant.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

using Rational = mpq_class;

enum class Verdict { Embeds, DoesNotEmbed, Unknown, NotIsotopic };
auto verdict_name(Verdict v) -> std::string;

struct ObstructionReport {
  int ambient = 0;
  TwistedClass klass;
  bool trivial = true;
  std::optional<Integer> order; // nullopt: infinite order
  bool mod2_trivial = true;
  Verdict verdict = Verdict::Unknown;
  std::optional<int> co_index;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cochain on the top cells of the deleted product from points on the moment curve.
// position maps each vertex to its parameter; defaults to the vertex label.
auto moment_curve_cocycle(const ProductComplex& p, int n, const std::map<Vertex, Integer>& position) -> TwistedClass;
auto moment_curve_cocycle(const ProductComplex& p, int n) -> TwistedClass;

// Signed intersection counts of the affine images of disjoint n-simplices in R^{2n}.
// Throws DegenerateInput when some pair is not in general position.
auto geometric_cocycle(const ProductComplex& p, int n, const std::map<Vertex, std::vector<Rational>>& coords)
    -> TwistedClass;
auto moment_curve_points(const SimplicialComplex& k, int n) -> std::map<Vertex, std::vector<Rational>>;

auto van_kampen(const SimplicialComplex& k) -> ObstructionReport;
auto van_kampen(const SimplicialComplex& k, const ProductComplex& p) -> ObstructionReport;

// coker of C_1(Gamma) -> sum over n-simplices s of H^n(disjoint_complement(k, s)).
auto h2n_presentation(const SimplicialComplex& k) -> AbelianGroup;
auto h2n_direct(const SimplicialComplex& k) -> AbelianGroup;

// Panelled embeddings of the cone into R^{2n+1}.
auto panelled_cone_obstruction(const SimplicialComplex& k) -> ObstructionReport;

struct CycleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple cycles of a graph as sorted edge lists, in a deterministic order.
auto simple_cycles(const SimplicialComplex& g, std::size_t cap = 200000) -> std::vector<std::vector<Simplex>>;
// Graph plus a cone over every simple cycle whose disjoint complement contains a cycle.
auto x_plus(const SimplicialComplex& g, std::size_t cap = 200000) -> SimplicialComplex;
auto linkless_obstruction(const SimplicialComplex& g, std::size_t cap = 200000) -> ObstructionReport;

struct SpatialGraphEmbedding {
  SimplicialComplex graph;
  std::map<Vertex, std::array<Rational, 3>> coords;
};

auto parse_embedding(const std::string& text) -> SpatialGraphEmbedding;
auto format_embedding(const SpatialGraphEmbedding& g) -> std::string;
// Throws DegenerateInput when two disjoint edges meet.
void check_general_position(const SpatialGraphEmbedding& g);

// Projection along (a, b, 1).
struct Projection {
  Rational a = 0;
  Rational b = 0;
};

// Sum of crossing signs over each pair of disjoint edges; throws DegenerateInput
// when the projection is not generic.
auto gauss_projection_class(const SpatialGraphEmbedding& g, const ProductComplex& p, const Projection& dir)
    -> TwistedClass;
// First generic projection among the vertical one and seeded random shears.
auto generic_projection(const SpatialGraphEmbedding& g, unsigned seed) -> Projection;
auto gauss_projection_class(const SpatialGraphEmbedding& g, unsigned seed = 1) -> TwistedClass;
auto isotopy_obstruction(const SpatialGraphEmbedding& f, const SpatialGraphEmbedding& g, unsigned seed = 1)
    -> ObstructionReport;

struct StarCondition {
  Simplex simplex;
  int link_dimension = 0;
  bool holds = true;
};

struct CoconnectivityReport {
  int n = 0;
  int k = 0;
  bool hypothesis = false; // reduced H^{n-d}(K minus a point) = 0 for d <= k at every point
  bool i_k = false;
  bool ii_k_minus_1 = false;
  std::vector<StarCondition> star_table;
  std::optional<int> embeds_in;
  std::vector<Simplex> non_manifold_locus;
  bool locus_bound_holds = true;
};

auto coconnectivity_check(const SimplicialComplex& k, int kk) -> CoconnectivityReport;
// Simplices whose link is not a homology sphere of dimension n - dim - 1.
auto homology_manifold_locus(const SimplicialComplex& k) -> std::vector<Simplex>;

// Fixture complexes.
auto k5() -> SimplicialComplex;
auto k33() -> SimplicialComplex;
auto petersen_graph() -> SimplicialComplex;
// n-skeleton of the (2n+2)-simplex.
auto flores(int n) -> SimplicialComplex;
// skeleton(6,2) with one triangle replaced by a disk attached along a degree two map.
auto sarkaria_example() -> SimplicialComplex;
auto random_planar_graph(int vertices, double keep, unsigned seed) -> SimplicialComplex;
auto random_complex(int vertices, int n, double density, unsigned seed) -> SimplicialComplex;
auto fixture(const std::string& name) -> SimplicialComplex;
auto fixture_names() -> std::vector<std::string>;

// Two straight-line embeddings of K5 whose projections differ in one crossing.
auto k5_crossing_change_pair() -> std::pair<SpatialGraphEmbedding, SpatialGraphEmbedding>;
auto unlinked_triangles() -> SpatialGraphEmbedding;
auto hopf_triangles() -> SpatialGraphEmbedding;

} // namespace vk
