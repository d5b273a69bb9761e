#include "kanenobu/diagram/operations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kanenobu {

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.size());
  for (const auto& x : d.crossings()) {
    const auto& [a, b, c, e] = x.arcs;
    if (x.sign > 0)
      xs.push_back({{e, a, b, c}, -1});
    else
      xs.push_back({{b, c, e, a}, 1});
  }
  return PlanarDiagram(std::move(xs), d.free_circles());
}

PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2) {
  std::vector<Crossing> xs = d1.crossings();
  const int shift = 2 * static_cast<int>(d1.size());
  for (auto x : d2.crossings()) {
    for (int& a : x.arcs) a += shift;
    xs.push_back(x);
  }
  return PlanarDiagram(std::move(xs), d1.free_circles() + d2.free_circles());
}

namespace {

// Entering and exiting ports of an arc in a diagram.
std::pair<int, int> arc_ends(const PlanarDiagram& d, const std::vector<PortHint>& hints, int arc) {
  int head = -1, tail = -1;
  for (int p = 0; p < static_cast<int>(hints.size()); ++p) {
    if (d.crossing(crossing_of(p)).arcs[slot_of(p)] != arc) continue;
    (hints[p].entering ? head : tail) = p;
  }
  if (head < 0 || tail < 0) throw std::invalid_argument("arc " + std::to_string(arc) + " is not in the diagram");
  return {head, tail};
}

}  // namespace

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2, int arc1, int arc2) {
  auto absorb = [](const PlanarDiagram& big, const PlanarDiagram& circle, int arc) {
    if (arc != 0 || circle.free_circles() < 1) throw std::invalid_argument("invalid arc on a crossingless diagram");
    return PlanarDiagram(big.crossings(), big.free_circles() + circle.free_circles() - 1);
  };
  if (d2.size() == 0) return absorb(d1, d2, arc2);
  if (d1.size() == 0) return absorb(d2, d1, arc1);
  const int n1 = static_cast<int>(d1.size());
  if (arc1 < 1 || arc1 > 2 * n1) throw std::invalid_argument("arc1 out of range");
  if (arc2 < 1 || arc2 > 2 * static_cast<int>(d2.size())) throw std::invalid_argument("arc2 out of range");

  PortGraph g1 = PortGraph::from_diagram(d1), g2 = PortGraph::from_diagram(d2);
  std::vector<PortHint> h1 = hints_of(d1), h2 = hints_of(d2);
  auto [head1, tail1] = arc_ends(d1, h1, arc1);
  auto [head2, tail2] = arc_ends(d2, h2, arc2);

  PortGraph g;
  g.n = g1.n + g2.n;
  g.link = g1.link;
  for (int q : g2.link) g.link.push_back(q + 4 * n1);
  g.free_loops = g1.free_loops + g2.free_loops;
  std::vector<PortHint> hints = h1;
  for (auto h : h2) {
    h.rank += 2 * n1;
    hints.push_back(h);
  }
  head2 += 4 * n1;
  tail2 += 4 * n1;
  g.connect(tail1, head2);
  g.connect(tail2, head1);
  return to_diagram(g, &hints);
}

PlanarDiagram resolve(const PlanarDiagram& d, int c, int r) {
  if (c < 0 || c >= static_cast<int>(d.size())) throw std::out_of_range("crossing index out of range");
  if (r != 0 && r != 1) throw std::invalid_argument("resolution must be 0 or 1");
  PortGraph g = PortGraph::from_diagram(d);
  std::vector<PortHint> old = hints_of(d);
  std::vector<int> kept;
  PortGraph h = splice(g, {{c, r == 0 ? kSmoothing0 : kSmoothing1}}, &kept);
  std::vector<PortHint> hints(h.link.size());
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p)
    if (kept[crossing_of(p)] >= 0) hints[port(kept[crossing_of(p)], slot_of(p))] = old[p];
  return to_diagram(h, &hints);
}

int circle_count(const PortGraph& g, std::uint64_t mask) {
  const int np = static_cast<int>(g.link.size());
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  int classes = np;
  auto join = [&](int a, int b) {
    if (find(a) != find(b)) {
      unite(a, b);
      --classes;
    }
  };
  for (int p = 0; p < np; ++p)
    if (p < g.link[p]) join(p, g.link[p]);
  for (int c = 0; c < g.n; ++c) {
    const auto& pairs = ((mask >> c) & 1u) ? kSmoothing1 : kSmoothing0;
    join(port(c, 0), port(c, pairs[0]));
    join(port(c, 2), port(c, pairs[2]));
  }
  return classes + g.free_loops;
}

int circle_count(const PlanarDiagram& d, const std::vector<int>& choice) {
  if (choice.size() != d.size()) throw std::invalid_argument("choice length must equal the crossing count");
  if (d.size() > 64) throw std::invalid_argument("too many crossings for a 64-bit state");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < choice.size(); ++i)
    if (choice[i]) mask |= std::uint64_t{1} << i;
  return circle_count(PortGraph::from_diagram(d), mask);
}

int bridge_length(const PlanarDiagram& d) {
  if (d.size() == 0) return 0;
  PortGraph g = PortGraph::from_diagram(d);
  std::vector<PortHint> hints = hints_of(d);
  std::vector<char> seen(g.link.size(), 0);
  int best = 0;
  for (int p0 = 0; p0 < static_cast<int>(g.link.size()); ++p0) {
    if (seen[p0] || !hints[p0].entering) continue;
    std::vector<int> over;
    int cur = p0;
    do {
      seen[cur] = 1;
      over.push_back(slot_of(cur) & 1);
      cur = g.link[opposite(cur)];
    } while (cur != p0);
    const int m = static_cast<int>(over.size());
    int start = -1;
    for (int i = 0; i < m; ++i)
      if (over[i] != over[(i + m - 1) % m]) {
        start = i;
        break;
      }
    if (start < 0) {
      best = std::max(best, m);
      continue;
    }
    int run = 0;
    for (int i = 0; i < m; ++i) {
      int k = (start + i) % m;
      run = (i > 0 && over[k] == over[(k + m - 1) % m]) ? run + 1 : 1;
      best = std::max(best, run);
    }
  }
  return best;
}

bool is_alternating(const PlanarDiagram& d) { return d.size() == 0 || bridge_length(d) == 1; }

namespace {

std::vector<int> oriented_code(const PortGraph& g, const PlanarDiagram& d, int start, std::vector<int>& order_of) {
  std::vector<int> order{start}, code;
  order_of[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    code.push_back(d.crossing(c).sign);
    for (int j = 0; j < 4; ++j) {
      int q = g.link[port(c, j)];
      int y = crossing_of(q);
      if (order_of[y] < 0) {
        order_of[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
      code.push_back(order_of[y]);
      code.push_back(slot_of(q));
    }
  }
  for (int c : order) order_of[c] = -1;
  return code;
}

}  // namespace

std::string canonical_encoding(const PlanarDiagram& d) {
  PortGraph g = PortGraph::from_diagram(d);
  int ncomp = 0;
  std::vector<int> comp = projection_components(g, &ncomp);
  std::vector<std::vector<int>> best(ncomp);
  std::vector<int> order_of(g.n, -1);
  for (int c = 0; c < g.n; ++c) {
    auto code = oriented_code(g, d, c, order_of);
    auto& b = best[comp[c]];
    if (b.empty() || code < b) b = std::move(code);
  }
  std::sort(best.begin(), best.end());
  std::string out = "O" + std::to_string(d.free_circles());
  for (const auto& code : best) {
    out += ';';
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(code[i]);
    }
  }
  return out;
}

}  // namespace kanenobu
