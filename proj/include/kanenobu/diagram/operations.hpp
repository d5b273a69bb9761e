#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

// Switches every crossing; labels are kept.
PlanarDiagram mirror(const PlanarDiagram& d);

// Arcs of d2 are shifted past those of d1.
PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2);

// Cuts arc1 of d1 and arc2 of d2 and rejoins them respecting orientation.
// A crossingless single circle may be passed with arc 0. Throws
// std::invalid_argument for an arc that is not in the diagram.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int arc1, int arc2);

// Smooths crossing c: r = 0 joins (a,b),(c,d); r = 1 joins (a,d),(b,c).
// Each resulting component keeps the direction of its lowest old label and
// components are renumbered in that order from there. Throws
// std::out_of_range for a bad index.
PlanarDiagram resolve(const PlanarDiagram& d, int c, int r);

// Number of circles after smoothing every crossing as in choice
// (choice[i] for crossing i).
int circle_count(const PlanarDiagram& d, const std::vector<int>& choice);
// Same for a port graph and a bit mask (bit i for crossing i).
int circle_count(const PortGraph& g, std::uint64_t mask);

// Longest cyclic run of consecutive over- or under-passes along any
// component. 0 for a crossingless diagram.
int bridge_length(const PlanarDiagram& d);
bool is_alternating(const PlanarDiagram& d);

// Oriented encoding, invariant under relabeling arcs and reordering
// crossings; used as the cache key.
std::string canonical_encoding(const PlanarDiagram& d);

}  // namespace kanenobu
