#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kanenobu/diagram/planar_diagram.hpp"

namespace kanenobu {

// Unoriented combinatorial map. Port p = 4*c + k is the k-th position of
// crossing c counterclockwise; ports 4c and 4c+2 carry the under strand.
// link[p] is the port at the other end of the edge leaving p.
struct PortGraph {
  int n = 0;
  std::vector<int> link;
  int free_loops = 0;

  static PortGraph from_diagram(const PlanarDiagram& d);
  // Arc tuples only; signs are ignored.
  static PortGraph from_tuples(const std::vector<std::array<int, 4>>& tuples);

  int add_crossing();
  void connect(int p, int q) {
    link[p] = q;
    link[q] = p;
  }
  bool operator==(const PortGraph&) const = default;
};

inline int port(int c, int k) { return 4 * c + (k & 3); }
inline int crossing_of(int p) { return p >> 2; }
inline int slot_of(int p) { return p & 3; }
inline int opposite(int p) { return (p & ~3) | ((p + 2) & 3); }

// Faces as lists of edges (p, link[p]); leaving an edge at q turns to the
// next port counterclockwise. Deterministic order.
std::vector<std::vector<std::array<int, 2>>> faces(const PortGraph& g);

// Connected components of the projection (crossings joined by edges).
std::vector<int> projection_components(const PortGraph& g, int* count);

bool is_planar(const PortGraph& g);

// Strands entering ports of each crossing. For each removed crossing,
// inner[k] is the slot joined to slot k inside it.
struct Removal {
  int crossing;
  std::array<int, 4> inner;
};
inline constexpr std::array<int, 4> kThrough{2, 3, 0, 1};
inline constexpr std::array<int, 4> kSmoothing0{1, 0, 3, 2};
inline constexpr std::array<int, 4> kSmoothing1{3, 2, 1, 0};

// Removes crossings, joining strands as given. Closed curves that no
// longer meet any crossing become free loops. kept[c] is the new index of
// crossing c or -1.
PortGraph splice(const PortGraph& g, const std::vector<Removal>& removals, std::vector<int>* kept = nullptr);

// Per-port orientation hint when converting back to a diagram: rank orders
// components and picks the seed; entering says the hinted strand enters the
// crossing at this port.
struct PortHint {
  int rank = 0;
  bool entering = true;
};

// Orients and labels a port graph. Each component is oriented to enter its
// seed port (the port of minimal (rank, !entering)), components are ordered
// by seed and labels run consecutively from the arc entering the seed.
// Without hints the rank is the port id and every port is entering.
PlanarDiagram to_diagram(const PortGraph& g, const std::vector<PortHint>* hints = nullptr);

// Hints recording the orientation and labels of d on its port graph.
std::vector<PortHint> hints_of(const PlanarDiagram& d);

// Canonical encoding up to relabeling crossings and rotating each crossing
// by a multiple of 90 degrees; the under/over position is part of the code.
// Free loops are included.
std::string canonical_key(const PortGraph& g);

}  // namespace kanenobu
