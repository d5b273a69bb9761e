#include "kanenobu/polyinv/kauffman.hpp"

#include <algorithm>

#include "kanenobu/diagram/limits.hpp"

namespace kanenobu {

LaurentPoly2 kauffman_delta() {
  return LaurentPoly2::monomial(1, -1) + LaurentPoly2::monomial(-1, -1) - LaurentPoly2::constant(1);
}

namespace {

const LaurentPoly2& delta() {
  static const LaurentPoly2 d = kauffman_delta();
  return d;
}

// Components of the projection as separate graphs.
std::vector<PortGraph> split(const PortGraph& g, int ncomp, const std::vector<int>& comp) {
  std::vector<PortGraph> parts(ncomp);
  std::vector<int> local(g.n);
  for (int c = 0; c < g.n; ++c) local[c] = parts[comp[c]].n++;
  for (auto& part : parts) part.link.assign(4 * part.n, -1);
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) {
    int c = crossing_of(p), q = g.link[p];
    parts[comp[c]].link[port(local[c], slot_of(p))] = port(local[crossing_of(q)], slot_of(q));
  }
  return parts;
}

// Same crossing with its strands exchanged: new slot j is old slot j+1.
PortGraph switched(const PortGraph& g, int c) {
  PortGraph h = g;
  auto moved = [c](int p) { return crossing_of(p) == c ? port(c, slot_of(p) + 3) : p; };
  for (int p = 0; p < static_cast<int>(g.link.size()); ++p) h.link[moved(p)] = moved(g.link[p]);
  return h;
}

// Passes of one traversal of every component: ports entered, in order.
std::vector<std::vector<int>> components(const PortGraph& g) {
  std::vector<char> seen(g.link.size(), 0);
  std::vector<std::vector<int>> out;
  for (int p0 = 0; p0 < static_cast<int>(g.link.size()); ++p0) {
    if (seen[p0]) continue;
    std::vector<int> comp;
    int cur = p0;
    do {
      seen[cur] = seen[opposite(cur)] = 1;
      comp.push_back(cur);
      cur = g.link[opposite(cur)];
    } while (cur != p0);
    out.push_back(std::move(comp));
  }
  return out;
}

// Sum of signs over crossings whose two passes lie on one component.
int self_writhe(const PortGraph& g) {
  std::vector<int> under_in(g.n, -1), over_in(g.n, -1), owner(g.n, -1);
  std::vector<char> self(g.n, 0);
  int id = 0;
  for (const auto& comp : components(g)) {
    for (int p : comp) {
      int c = crossing_of(p);
      (slot_of(p) % 2 == 0 ? under_in : over_in)[c] = slot_of(p);
      if (owner[c] == id) self[c] = 1;
      owner[c] = id;
    }
    ++id;
  }
  int w = 0;
  for (int c = 0; c < g.n; ++c)
    if (self[c]) w += over_in[c] == (under_in[c] + 3) % 4 ? 1 : -1;
  return w;
}

// Traversal order with per-component basepoint and direction chosen to
// minimise the self-crossings first met from below.
std::vector<int> traversal(const PortGraph& g) {
  std::vector<int> seq;
  std::vector<int> count(g.n), first(g.n);
  for (const auto& comp : components(g)) {
    const int m = static_cast<int>(comp.size());
    std::fill(count.begin(), count.end(), 0);
    for (int p : comp) ++count[crossing_of(p)];
    std::vector<int> best;
    int best_bad = -1;
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> cc = comp;
      if (dir == 1) {
        std::reverse(cc.begin(), cc.end());
        for (int& p : cc) p = opposite(p);
      }
      for (int s = 0; s < m; ++s) {
        std::fill(first.begin(), first.end(), -1);
        int bad = 0;
        for (int i = 0; i < m; ++i) {
          int p = cc[(s + i) % m], c = crossing_of(p);
          if (first[c] >= 0) continue;
          first[c] = slot_of(p);
          if (count[c] == 2 && slot_of(p) % 2 == 0) ++bad;
        }
        if (best_bad < 0 || bad < best_bad) {
          best_bad = bad;
          best.assign(cc.begin() + s, cc.end());
          best.insert(best.end(), cc.begin(), cc.begin() + s);
        }
      }
    }
    seq.insert(seq.end(), best.begin(), best.end());
  }
  return seq;
}

}  // namespace

LaurentPoly2 KauffmanEngine::lambda(const PlanarDiagram& d) {
  check_cap("kauffman", static_cast<int>(d.size()), opt_.cap);
  return eval(PortGraph::from_diagram(d));
}

LaurentPoly2 KauffmanEngine::lambda(const PortGraph& g) {
  check_cap("kauffman", g.n, opt_.cap);
  return eval(g);
}

LaurentPoly2 KauffmanEngine::eval(const PortGraph& g) {
  ++calls_;
  if (g.n == 0) return delta().pow(static_cast<unsigned>(std::max(g.free_loops - 1, 0)));
  LaurentPoly2 factor = delta().pow(static_cast<unsigned>(g.free_loops));
  int ncomp = 0;
  std::vector<int> comp = projection_components(g, &ncomp);
  factor *= delta().pow(static_cast<unsigned>(ncomp - 1));
  if (ncomp == 1) {
    PortGraph h = g;
    h.free_loops = 0;
    return factor * eval_connected(h);
  }
  for (auto& part : split(g, ncomp, comp)) factor *= eval_connected(part);
  return factor;
}

LaurentPoly2 KauffmanEngine::eval_connected(const PortGraph& g) {
  std::string key;
  if (opt_.memoize) {
    key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto remember = [&](LaurentPoly2 v) {
    if (opt_.memoize) memo_.emplace(std::move(key), v);
    return v;
  };

  const int np = static_cast<int>(g.link.size());
  // curl: slots k and k+1 of one crossing joined by an edge
  for (int p = 0; p < np; ++p) {
    if (g.link[p] != port(crossing_of(p), slot_of(p) + 1)) continue;
    const int sign = slot_of(p) % 2 == 0 ? 1 : -1;
    PortGraph h = splice(g, {{crossing_of(p), kThrough}});
    return remember(eval(h).shifted(sign, 0));
  }
  // bigon whose top strand is the same at both crossings
  if (opt_.reduce_bigons) {
    for (int p = 0; p < np; ++p) {
      const int q = g.link[p];
      const int c1 = crossing_of(p), c2 = crossing_of(q);
      if (c1 == c2 || g.link[port(c2, slot_of(q) + 1)] != port(c1, slot_of(p) + 3)) continue;
      if (slot_of(p) % 2 != slot_of(q) % 2) continue;
      PortGraph h = splice(g, {{c1, kThrough}, {c2, kThrough}});
      return remember(eval(h));
    }
  }

  const std::vector<int> seq = traversal(g);
  std::vector<int> first(g.n, -1), bad;
  for (int p : seq) {
    int c = crossing_of(p);
    if (first[c] >= 0) continue;
    first[c] = slot_of(p);
    if (slot_of(p) % 2 == 0) bad.push_back(c);
  }
  const int ncomp = static_cast<int>(components(g).size());
  const LaurentPoly2 x = LaurentPoly2::monomial(0, 1);

  LaurentPoly2 total;
  PortGraph cur = g;
  int sign = 1;
  for (int c : bad) {
    LaurentPoly2 term = eval(splice(cur, {{c, kSmoothing0}})) + eval(splice(cur, {{c, kSmoothing1}}));
    term *= x;
    if (sign > 0)
      total += term;
    else
      total -= term;
    cur = switched(cur, c);
    sign = -sign;
  }
  LaurentPoly2 unlink = delta().pow(static_cast<unsigned>(ncomp - 1)).shifted(self_writhe(cur), 0);
  if (sign > 0)
    total += unlink;
  else
    total -= unlink;
  return remember(std::move(total));
}

LaurentPoly2 kauffman_lambda(const PlanarDiagram& d, const KauffmanOptions& opt) {
  KauffmanEngine e(opt);
  return e.lambda(d);
}

LaurentPoly2 kauffman_F(const PlanarDiagram& d, const KauffmanOptions& opt) {
  return kauffman_lambda(d, opt).shifted(-d.writhe(), 0);
}

LaurentPoly1 q_polynomial(const PlanarDiagram& d, const KauffmanOptions& opt) {
  return kauffman_F(d, opt).at_a_one();
}

}  // namespace kanenobu
