#include "kanenobu/diagram/planar_diagram.hpp"

#include <algorithm>

#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

int PlanarDiagram::positive_crossings() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.sign > 0; }));
}

int PlanarDiagram::negative_crossings() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.sign < 0; }));
}

int PlanarDiagram::components() const {
  if (crossings_.empty()) return free_circles_;
  PortGraph g = PortGraph::from_diagram(*this);
  std::vector<char> seen(g.link.size(), 0);
  int count = 0;
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) {
    if (seen[p]) continue;
    ++count;
    int cur = p;
    do {
      seen[cur] = seen[opposite(cur)] = 1;
      cur = g.link[opposite(cur)];
    } while (cur != p);
  }
  return count + free_circles_;
}

const char* defect_name(Defect d) {
  switch (d) {
    case Defect::Empty: return "empty diagram";
    case Defect::SignValue: return "sign value";
    case Defect::ArcRange: return "arc range";
    case Defect::ArcMultiplicity: return "arc multiplicity";
    case Defect::LabelOrder: return "label order";
    case Defect::Orientation: return "orientation";
    case Defect::SignMismatch: return "sign mismatch";
    case Defect::Planarity: return "planarity";
  }
  return "unknown";
}

namespace {

ValidationError fail(Defect d, std::string msg) { return {d, std::move(msg)}; }

}  // namespace

std::optional<ValidationError> validate(const PlanarDiagram& d) {
  const int n = static_cast<int>(d.size());
  if (d.free_circles() < 0) return fail(Defect::Empty, "negative circle count");
  if (n == 0) {
    if (d.free_circles() == 0) return fail(Defect::Empty, "no crossings and no circles");
    return std::nullopt;
  }
  for (int c = 0; c < n; ++c)
    if (d.crossing(c).sign != 1 && d.crossing(c).sign != -1)
      return fail(Defect::SignValue, "crossing " + std::to_string(c) + " has sign outside {+1,-1}");

  std::vector<std::vector<int>> occ(2 * n + 1);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      int a = d.crossing(c).arcs[k];
      if (a < 1 || a > 2 * n)
        return fail(Defect::ArcRange, "arc " + std::to_string(a) + " outside 1.." + std::to_string(2 * n));
      occ[a].push_back(port(c, k));
    }
  for (int a = 1; a <= 2 * n; ++a)
    if (occ[a].size() != 2)
      return fail(Defect::ArcMultiplicity,
                  "arc " + std::to_string(a) + " appears " + std::to_string(occ[a].size()) + " times");

  PortGraph g = PortGraph::from_diagram(d);
  auto label = [&](int p) { return d.crossing(crossing_of(p)).arcs[slot_of(p)]; };
  std::vector<char> seen(4 * n, 0);
  for (int p0 = 0; p0 < 4 * n; ++p0) {
    if (seen[p0]) continue;
    std::vector<int> passes;  // ports entered while walking from p0
    int cur = p0;
    do {
      seen[cur] = seen[opposite(cur)] = 1;
      passes.push_back(cur);
      cur = g.link[opposite(cur)];
    } while (cur != p0);

    const int m = static_cast<int>(passes.size());
    std::vector<int> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = label(passes[i]);
    const auto [lo_it, hi_it] = std::minmax_element(labels.begin(), labels.end());
    const int lo = *lo_it, hi = *hi_it;
    if (hi - lo + 1 != m)
      return fail(Defect::LabelOrder, "component through arc " + std::to_string(lo) + " has non-consecutive labels");
    auto succ = [&](int a) { return a == hi ? lo : a + 1; };
    bool fwd = true, bwd = true;
    for (int i = 0; i < m; ++i) {
      int a = labels[i], b = labels[(i + 1) % m];
      fwd = fwd && b == succ(a);
      bwd = bwd && a == succ(b);
    }
    if (!fwd && !bwd)
      return fail(Defect::LabelOrder, "component through arc " + std::to_string(lo) + " is not numbered along a direction");

    int dir = fwd ? 1 : -1;
    if (fwd && bwd) {
      dir = 0;
      for (int q : passes)
        if (slot_of(q) % 2 == 0) {
          dir = slot_of(q) == 0 ? 1 : -1;
          break;
        }
      if (dir == 0) {
        int q = passes[0];
        int entry_if_fwd = slot_of(q);
        int s = d.crossing(crossing_of(q)).sign;
        dir = ((entry_if_fwd == 3) == (s > 0)) ? 1 : -1;
      }
    }
    for (int q : passes) {
      int entry = dir > 0 ? q : opposite(q);
      int c = crossing_of(entry), k = slot_of(entry);
      if (k % 2 == 0) {
        if (k != 0)
          return fail(Defect::Orientation, "crossing " + std::to_string(c) + ": under strand does not run a -> c");
      } else {
        int s = k == 3 ? 1 : -1;
        if (s != d.crossing(c).sign)
          return fail(Defect::SignMismatch, "crossing " + std::to_string(c) + ": listed sign disagrees with orientation");
      }
    }
  }
  if (!is_planar(g)) return fail(Defect::Planarity, "face count violates Euler's formula");
  return std::nullopt;
}

}  // namespace kanenobu
