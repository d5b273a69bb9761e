#include "kanenobu/diagram/kanenobu_diagram.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kanenobu {

namespace {

const std::vector<std::array<int, 4>> kFigureEight{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};

// Vertical twist of n crossings replacing the edge u-v and its mirror
// image. h = +1 winds it so that negative parameters give negative
// crossings; h = -1 the other way.
void insert_twist(PortGraph& g, int u, int v, int us, int vs, int n, int h) {
  if (n == 0) return;
  std::vector<int> ts;
  for (int i = 0; i < n; ++i) ts.push_back(g.add_crossing());
  auto at = [h](int c, int slot) { return port(c, h == 1 ? slot : slot + 1); };
  g.connect(u, at(ts.front(), 3));
  g.connect(us, at(ts.front(), 0));
  for (int i = 0; i + 1 < n; ++i) {
    g.connect(at(ts[i], 2), at(ts[i + 1], 3));
    g.connect(at(ts[i], 1), at(ts[i + 1], 0));
  }
  g.connect(at(ts.back(), 2), v);
  g.connect(at(ts.back(), 1), vs);
}

}  // namespace

PlanarDiagram figure_eight() { return to_diagram(PortGraph::from_tuples(kFigureEight)); }

PortGraph kanenobu_port_graph(int p, int q) {
  const PortGraph base = PortGraph::from_tuples(kFigureEight);
  const int nb = base.n;
  PortGraph g;
  g.n = 2 * nb;
  g.link.assign(8 * nb, -1);
  auto reflect = [nb](int x) { return port(crossing_of(x) + nb, 4 - slot_of(x)); };
  for (int x = 0; x < 4 * nb; ++x) {
    g.link[x] = base.link[x];
    g.link[reflect(x)] = reflect(base.link[x]);
  }
  const auto fs = faces(base);
  const auto& tri = fs.front();
  if (tri.size() != 3) throw std::logic_error("template face is not a triangle");

  const auto [u0, v0] = tri[0];
  g.connect(u0, reflect(u0));
  g.connect(v0, reflect(v0));
  const auto [u1, v1] = tri[1];
  insert_twist(g, u1, v1, reflect(u1), reflect(v1), std::abs(p), p > 0 ? -1 : 1);
  const auto [u2, v2] = tri[2];
  insert_twist(g, u2, v2, reflect(u2), reflect(v2), std::abs(q), q > 0 ? -1 : 1);
  return g;
}

PlanarDiagram kanenobu_diagram(int p, int q) { return to_diagram(kanenobu_port_graph(p, q)); }

TwistRegions kanenobu_twist_crossings(int p, int q) {
  TwistRegions r;
  const int ap = std::abs(p), aq = std::abs(q);
  for (int i = 0; i < ap; ++i) r.p.push_back(8 + i);
  for (int i = 0; i < aq; ++i) r.q.push_back(8 + ap + i);
  return r;
}

}  // namespace kanenobu
