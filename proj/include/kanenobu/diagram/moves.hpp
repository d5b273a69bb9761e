#pragma once

#include <optional>

#include "kanenobu/diagram/planar_diagram.hpp"

namespace kanenobu {

// Inserts a curl on an arc (arc 0 on a crossingless circle). variant in
// 0..3: bit 0 puts the first pass over, bit 1 picks the side of the loop.
PlanarDiagram add_curl(const PlanarDiagram& d, int arc, int variant);

// Pushes arc a across arc b inside a face they share, creating a bigon with
// a on top when a_over holds. nullopt when the arcs share no face.
std::optional<PlanarDiagram> add_bigon(const PlanarDiagram& d, int a, int b, bool a_over);

}  // namespace kanenobu
