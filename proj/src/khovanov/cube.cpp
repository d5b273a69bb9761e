#include "kanenobu/khovanov/cube.hpp"

#include <stdexcept>

namespace kanenobu {

ResolutionCube::ResolutionCube(const PlanarDiagram& d)
    : n_(static_cast<int>(d.size())), ports_(4 * n_), free_(d.free_circles()) {
  if (n_ > 24) throw std::invalid_argument("cube too large");
  const PortGraph g = PortGraph::from_diagram(d);
  const std::uint32_t nv = vertices();
  circles_.assign(nv, 0);
  circle_of_.assign(std::size_t(nv) * ports_, 0xff);
  for (std::uint32_t v = 0; v < nv; ++v) {
    std::uint8_t* label = circle_of_.data() + std::size_t(v) * ports_;
    int count = 0;
    for (int p = 0; p < ports_; ++p) {
      if (label[p] != 0xff) continue;
      int cur = p;
      do {
        label[cur] = static_cast<std::uint8_t>(count);
        const int nxt = g.link[cur];
        label[nxt] = static_cast<std::uint8_t>(count);
        const int c = crossing_of(nxt), k = slot_of(nxt);
        cur = port(c, ((v >> c) & 1u) ? 3 - k : k ^ 1);
      } while (cur != p);
      ++count;
    }
    count += free_;
    if (count > 31) throw std::invalid_argument("too many circles in a resolution");
    circles_[v] = static_cast<std::uint8_t>(count);
  }
}

ResolutionCube::Edge ResolutionCube::edge(std::uint32_t v, int c) const {
  if (c < 0 || c >= n_ || ((v >> c) & 1u)) throw std::out_of_range("not a cube edge");
  const std::uint32_t w = v | (1u << c);
  Edge e;
  e.sign = (__builtin_popcount(v & ((1u << c) - 1)) % 2 == 0) ? 1 : -1;
  e.a = circle_of(v, port(c, 0));
  e.b = circle_of(v, port(c, 2));
  e.merge = e.a != e.b;
  e.dst_a = circle_of(w, port(c, 0));
  e.dst_b = e.merge ? e.dst_a : circle_of(w, port(c, 1));
  const int cv = circles(v), cw = circles(w);
  e.carry.assign(cv, -1);
  for (int p = 0; p < ports_; ++p) {
    if (crossing_of(p) == c) continue;
    const int i = circle_of(v, p);
    if (i != e.a && i != e.b) e.carry[i] = circle_of(w, p);
  }
  for (int f = 0; f < free_; ++f) e.carry[cv - free_ + f] = cw - free_ + f;
  return e;
}

}  // namespace kanenobu
