#pragma once

#include <vector>

#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

// 4-crossing figure-eight knot.
PlanarDiagram figure_eight();

// K(p,q) as a symmetric union of the figure-eight diagram with its planar
// reflection, glued along a triangular face: one face edge carries the
// joining band, the other two carry vertical twist regions of |p| and |q|
// crossings. Twist crossings carry the sign of their parameter.
PortGraph kanenobu_port_graph(int p, int q);
PlanarDiagram kanenobu_diagram(int p, int q);

struct TwistRegions {
  std::vector<int> p;
  std::vector<int> q;
};
// Crossing indices of the two twist regions in kanenobu_diagram(p,q).
TwistRegions kanenobu_twist_crossings(int p, int q);

}  // namespace kanenobu
