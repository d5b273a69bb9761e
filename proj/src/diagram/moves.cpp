#include "kanenobu/diagram/moves.hpp"

#include <stdexcept>

#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

namespace {

struct Ends {
  int head = -1;
  int tail = -1;
};

Ends ends_of(const PlanarDiagram& d, const std::vector<PortHint>& hints, int arc) {
  Ends e;
  for (int p = 0; p < static_cast<int>(hints.size()); ++p)
    if (d.crossing(crossing_of(p)).arcs[slot_of(p)] == arc) (hints[p].entering ? e.head : e.tail) = p;
  if (e.head < 0 || e.tail < 0) throw std::invalid_argument("arc " + std::to_string(arc) + " is not in the diagram");
  return e;
}

}  // namespace

PlanarDiagram add_curl(const PlanarDiagram& d, int arc, int variant) {
  if (variant < 0 || variant > 3) throw std::invalid_argument("curl variant must be in 0..3");
  PortGraph g = PortGraph::from_diagram(d);
  std::vector<PortHint> hints = hints_of(d);
  const int i = variant & 1, j = i + ((variant & 2) ? 3 : 1);
  int tail, head;
  if (d.size() == 0) {
    if (arc != 0 || d.free_circles() < 1) throw std::invalid_argument("invalid arc on a crossingless diagram");
    --g.free_loops;
    tail = head = -1;
  } else {
    Ends e = ends_of(d, hints, arc);
    tail = e.tail;
    head = e.head;
  }
  const int z = g.add_crossing();
  hints.resize(g.link.size());
  const int zi = port(z, i), zo = port(z, i + 2), zj = port(z, j), zk = port(z, j + 2);
  g.connect(zo, zj);
  if (tail < 0) {
    g.connect(zk, zi);
  } else {
    g.connect(tail, zi);
    g.connect(zk, head);
  }
  const int rank = arc == 0 ? 0 : arc;
  hints[zi] = {rank, true};
  hints[zo] = {rank, false};
  hints[zj] = {rank, true};
  hints[zk] = {rank, false};
  return to_diagram(g, &hints);
}

std::optional<PlanarDiagram> add_bigon(const PlanarDiagram& d, int a, int b, bool a_over) {
  if (a == b) throw std::invalid_argument("bigon needs two distinct arcs");
  const PortGraph base = PortGraph::from_diagram(d);
  const std::vector<PortHint> base_hints = hints_of(d);
  const Ends ea = ends_of(d, base_hints, a), eb = ends_of(d, base_hints, b);
  const int first = a_over ? 1 : 0;
  for (int a2 : {first, first + 2})
    for (int b1 : {first + 1, first + 3})
      for (int b2 : {a2 + 1, a2 + 3})
        for (int order = 0; order < 2; ++order) {
          PortGraph g = base;
          std::vector<PortHint> hints = base_hints;
          const int z1 = g.add_crossing(), z2 = g.add_crossing();
          hints.resize(g.link.size());
          // strand a: tail -> z1 -> z2 -> head
          g.connect(ea.tail, port(z1, first));
          g.connect(port(z1, first + 2), port(z2, a2));
          g.connect(port(z2, a2 + 2), ea.head);
          hints[port(z1, first)] = {a, true};
          hints[port(z1, first + 2)] = {a, false};
          hints[port(z2, a2)] = {a, true};
          hints[port(z2, a2 + 2)] = {a, false};
          // strand b: tail -> x -> y -> head with {x, y} = {z1, z2}
          const int x = order == 0 ? z1 : z2, y = order == 0 ? z2 : z1;
          const int bx = order == 0 ? b1 : b2, by = order == 0 ? b2 : b1;
          g.connect(eb.tail, port(x, bx));
          g.connect(port(x, bx + 2), port(y, by));
          g.connect(port(y, by + 2), eb.head);
          hints[port(x, bx)] = {b, true};
          hints[port(x, bx + 2)] = {b, false};
          hints[port(y, by)] = {b, true};
          hints[port(y, by + 2)] = {b, false};
          if (is_planar(g)) return to_diagram(g, &hints);
        }
  return std::nullopt;
}

}  // namespace kanenobu
