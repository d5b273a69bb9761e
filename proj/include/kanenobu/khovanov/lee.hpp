#pragma once

#include <vector>

#include "kanenobu/diagram/planar_diagram.hpp"

namespace kanenobu {

// Homological degrees of rational Lee homology, one entry per dimension,
// ascending. The quantum filtration is not computed.
std::vector<int> lee_degrees(const PlanarDiagram& d, int cap = 14);

}  // namespace kanenobu
