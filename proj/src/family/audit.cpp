#include "kanenobu/family/audit.hpp"

#include "kanenobu/diagram/kanenobu_diagram.hpp"
#include "kanenobu/diagram/operations.hpp"
#include "kanenobu/polyinv/kauffman.hpp"

namespace kanenobu {

KidwellReport kidwell_audit(int p, int q, int kauffman_cap) {
  const PlanarDiagram d = kanenobu_diagram(p, q);
  KidwellReport r;
  r.deg_q = q_polynomial(d, {kauffman_cap}).max_half() / 2;
  r.bridge = bridge_length(d);
  r.crossings = static_cast<int>(d.size());
  r.inequality_holds = r.deg_q <= r.crossings - r.bridge;
  return r;
}

}  // namespace kanenobu
