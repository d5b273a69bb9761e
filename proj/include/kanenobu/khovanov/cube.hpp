#pragma once

#include <cstdint>
#include <vector>

#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

// Cube of resolutions. Vertex v has bit c set when crossing c takes its
// 1-smoothing; the 0-smoothing is the A-smoothing, joining slots (0,1) and
// (2,3). Circles of a vertex are numbered by first port met, free circles
// last.
class ResolutionCube {
 public:
  explicit ResolutionCube(const PlanarDiagram& d);

  int crossings() const { return n_; }
  std::uint32_t vertices() const { return 1u << n_; }
  int circles(std::uint32_t v) const { return circles_[v]; }
  int circle_of(std::uint32_t v, int port) const { return circle_of_[std::size_t(v) * ports_ + port]; }

  // Edge v -> v | (1 << c) for a crossing c not set in v.
  struct Edge {
    bool merge;
    int sign;
    // merge: circles a, b of v become circle dst_a of the target.
    // split: circle a of v becomes dst_a, dst_b of the target.
    int a, b;
    int dst_a, dst_b;
    // Target circle of every source circle not touching c, else -1.
    std::vector<int> carry;
  };
  Edge edge(std::uint32_t v, int c) const;

 private:
  int n_;
  int ports_;
  int free_;
  std::vector<std::uint8_t> circles_;
  std::vector<std::uint8_t> circle_of_;
};

}  // namespace kanenobu
