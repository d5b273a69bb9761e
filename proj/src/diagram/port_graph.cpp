#include "kanenobu/diagram/port_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace kanenobu {

PortGraph PortGraph::from_tuples(const std::vector<std::array<int, 4>>& tuples) {
  PortGraph g;
  g.n = static_cast<int>(tuples.size());
  g.link.assign(4 * g.n, -1);
  std::vector<int> first;
  for (int c = 0; c < g.n; ++c)
    for (int k = 0; k < 4; ++k) {
      int a = tuples[c][k];
      if (a < 0) throw std::invalid_argument("negative arc label");
      if (static_cast<int>(first.size()) <= a) first.resize(a + 1, -1);
      if (first[a] < 0) {
        first[a] = port(c, k);
      } else if (first[a] >= 0 && g.link[first[a]] < 0) {
        g.connect(first[a], port(c, k));
      } else {
        throw std::invalid_argument("arc label used more than twice");
      }
    }
  for (int p : g.link)
    if (p < 0) throw std::invalid_argument("arc label used only once");
  return g;
}

PortGraph PortGraph::from_diagram(const PlanarDiagram& d) {
  std::vector<std::array<int, 4>> t;
  t.reserve(d.size());
  for (const auto& c : d.crossings()) t.push_back(c.arcs);
  PortGraph g = from_tuples(t);
  g.free_loops = d.free_circles();
  return g;
}

int PortGraph::add_crossing() {
  link.resize(4 * (n + 1), -1);
  return n++;
}

std::vector<std::vector<std::array<int, 2>>> faces(const PortGraph& g) {
  std::vector<char> seen(g.link.size(), 0);
  std::vector<std::vector<std::array<int, 2>>> out;
  for (int p0 = 0; p0 < static_cast<int>(g.link.size()); ++p0) {
    if (seen[p0]) continue;
    std::vector<std::array<int, 2>> f;
    int cur = p0;
    while (!seen[cur]) {
      seen[cur] = 1;
      int nxt = g.link[cur];
      f.push_back({cur, nxt});
      cur = port(crossing_of(nxt), slot_of(nxt) + 1);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> projection_components(const PortGraph& g, int* count) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) {
    int a = find(crossing_of(p)), b = find(crossing_of(g.link[p]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(g.n, -1), id(g.n, -1);
  int k = 0;
  for (int c = 0; c < g.n; ++c) {
    int r = find(c);
    if (id[r] < 0) id[r] = k++;
    comp[c] = id[r];
  }
  if (count) *count = k;
  return comp;
}

bool is_planar(const PortGraph& g) {
  if (g.n == 0) return true;
  int comps = 0;
  projection_components(g, &comps);
  return static_cast<int>(faces(g).size()) == g.n + 2 * comps;
}

PortGraph splice(const PortGraph& g, const std::vector<Removal>& removals, std::vector<int>* kept) {
  std::vector<int> inner(g.link.size(), -1);
  std::vector<char> removed(g.n, 0);
  for (const auto& r : removals) {
    if (r.crossing < 0 || r.crossing >= g.n) throw std::out_of_range("crossing index out of range");
    removed[r.crossing] = 1;
    for (int k = 0; k < 4; ++k) inner[port(r.crossing, k)] = port(r.crossing, r.inner[k]);
  }
  std::vector<int> idx(g.n, -1);
  PortGraph h;
  for (int c = 0; c < g.n; ++c)
    if (!removed[c]) idx[c] = h.n++;
  h.link.assign(4 * h.n, -1);
  h.free_loops = g.free_loops;
  auto relabel = [&](int p) { return port(idx[crossing_of(p)], slot_of(p)); };

  std::vector<char> used(g.link.size(), 0);
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) {
    if (removed[crossing_of(p)]) continue;
    int q = g.link[p];
    while (removed[crossing_of(q)]) {
      used[q] = 1;
      int out = inner[q];
      used[out] = 1;
      q = g.link[out];
    }
    h.link[relabel(p)] = relabel(q);
  }
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) {
    if (!removed[crossing_of(p)] || used[p]) continue;
    int q = p;
    do {
      used[q] = 1;
      int out = inner[q];
      used[out] = 1;
      q = g.link[out];
    } while (q != p);
    ++h.free_loops;
  }
  if (kept) *kept = idx;
  return h;
}

PlanarDiagram to_diagram(const PortGraph& g, const std::vector<PortHint>* hints) {
  if (g.n == 0) return PlanarDiagram({}, g.free_loops);
  const int np = static_cast<int>(g.link.size());
  auto key = [&](int p) {
    if (!hints) return std::make_tuple(p, 0, p);
    const PortHint& h = (*hints)[p];
    return std::make_tuple(h.rank, h.entering ? 0 : 1, p);
  };

  std::vector<std::pair<std::tuple<int, int, int>, int>> seeds;
  std::vector<char> seen(np, 0);
  for (int p0 = 0; p0 < np; ++p0) {
    if (seen[p0]) continue;
    int best = p0, cur = p0;
    do {
      seen[cur] = seen[opposite(cur)] = 1;
      for (int q : {cur, opposite(cur)}) {
        if (key(q) < key(best)) best = q;
      }
      cur = g.link[opposite(cur)];
    } while (cur != p0);
    // A port hinted as exiting: the walk enters at the other end of its arc.
    int seed = (hints && !(*hints)[best].entering) ? g.link[best] : best;
    seeds.emplace_back(key(best), seed);
  }
  std::sort(seeds.begin(), seeds.end());

  std::vector<int> arc(np, 0), under_in(g.n, -1), over_in(g.n, -1);
  int label = 1;
  for (const auto& entry : seeds) {
    const int s = entry.second;
    int cur = s;
    do {
      arc[cur] = arc[g.link[cur]] = label++;
      int c = crossing_of(cur), k = slot_of(cur);
      (k % 2 == 0 ? under_in : over_in)[c] = k;
      cur = g.link[opposite(cur)];
    } while (cur != s);
  }
  std::vector<Crossing> xs(g.n);
  for (int c = 0; c < g.n; ++c) {
    int u = under_in[c];
    for (int j = 0; j < 4; ++j) xs[c].arcs[j] = arc[port(c, u + j)];
    xs[c].sign = over_in[c] == (u + 3) % 4 ? 1 : -1;
  }
  return PlanarDiagram(std::move(xs), g.free_loops);
}

std::vector<PortHint> hints_of(const PlanarDiagram& d) {
  std::vector<PortHint> h(4 * d.size());
  for (int c = 0; c < static_cast<int>(d.size()); ++c) {
    const Crossing& x = d.crossing(c);
    int over_entry = x.sign > 0 ? 3 : 1;
    for (int k = 0; k < 4; ++k) h[port(c, k)] = {x.arcs[k], k == 0 || k == over_entry};
  }
  return h;
}

namespace {

// Breadth-first code of one connected component from a starting port.
std::vector<int> code_from(const PortGraph& g, int start, std::vector<int>& order_of, std::vector<int>& base_of) {
  std::vector<int> order{crossing_of(start)};
  std::vector<int> code;
  order_of[crossing_of(start)] = 0;
  base_of[crossing_of(start)] = slot_of(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int c = order[i], base = base_of[c];
    code.push_back(base & 1);
    for (int j = 0; j < 4; ++j) {
      int q = g.link[port(c, base + j)];
      int y = crossing_of(q);
      if (order_of[y] < 0) {
        order_of[y] = static_cast<int>(order.size());
        base_of[y] = slot_of(q);
        order.push_back(y);
      }
      code.push_back(order_of[y]);
      code.push_back((slot_of(q) - base_of[y] + 4) & 3);
    }
  }
  for (int c : order) order_of[c] = -1;
  return code;
}

}  // namespace

std::string canonical_key(const PortGraph& g) {
  int ncomp = 0;
  std::vector<int> comp = projection_components(g, &ncomp);
  std::vector<std::vector<int>> members(ncomp);
  for (int c = 0; c < g.n; ++c) members[comp[c]].push_back(c);
  std::vector<int> order_of(g.n, -1), base_of(g.n, 0);
  std::vector<std::vector<int>> codes;
  for (const auto& mem : members) {
    std::vector<int> best;
    for (int c : mem)
      for (int k = 0; k < 4; ++k) {
        auto code = code_from(g, port(c, k), order_of, base_of);
        if (best.empty() || code < best) best = std::move(code);
      }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string key = "L" + std::to_string(g.free_loops);
  for (const auto& code : codes) {
    key.push_back('|');
    for (int v : code) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
  }
  return key;
}

}  // namespace kanenobu
