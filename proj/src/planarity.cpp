#include "vk/chords.hpp"

namespace vk {

auto planarity(const BlownUpComplex& b) -> PlanarityReport {
  PlanarityReport r;
  r.zeta_trivial = is_trivial(b.complex, euler_power(b.complex, 2));
  r.manturov = manturov_pairs(b.diagram);
  r.rotation = plane_rotation_system(b.diagram);
  r.planar = r.zeta_trivial;
  if (r.manturov.empty() != r.planar || r.rotation.has_value() != r.planar)
    throw std::logic_error("planarity methods disagree on " + b.diagram.to_string() +
                           ": zeta " + (r.zeta_trivial ? "trivial" : "nontrivial") + ", " +
                           std::to_string(r.manturov.size()) + " Manturov pairs, " +
                           (r.rotation ? "realizable" : "not realizable"));
  return r;
}

} // namespace vk
