#include "kanenobu/polyinv/jones.hpp"

#include <stdexcept>

#include "kanenobu/diagram/limits.hpp"
#include "kanenobu/diagram/port_graph.hpp"

namespace kanenobu {

namespace {

struct StateWalker {
  const std::vector<int>& link;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  explicit StateWalker(const std::vector<int>& l) : link(l), stamp(l.size(), 0) {}

  // Circles of the smoothing given by mask: each port has one edge partner
  // and one smoothing partner, so circles are the cycles of that pairing.
  int circles(std::uint64_t mask) {
    ++epoch;
    int count = 0;
    const int np = static_cast<int>(link.size());
    for (int p = 0; p < np; ++p) {
      if (stamp[p] == epoch) continue;
      ++count;
      int cur = p;
      do {
        stamp[cur] = epoch;
        int nxt = link[cur];
        stamp[nxt] = epoch;
        int c = nxt >> 2, k = nxt & 3;
        cur = (c << 2) | (((mask >> c) & 1u) ? 3 - k : k ^ 1);
      } while (cur != p);
    }
    return count;
  }
};

}  // namespace

StateHistogram state_histogram(const PlanarDiagram& d, Parallelism mode) {
  const int n = static_cast<int>(d.size());
  if (n >= 63) throw std::invalid_argument("too many crossings for a state sum");
  const PortGraph g = PortGraph::from_diagram(d);
  const int kmax = 2 * n + d.free_circles() + 2;
  const long long total = 1LL << n;
  StateHistogram hist(n + 1, std::vector<std::uint64_t>(kmax, 0));

  if (mode == Parallelism::Serial) {
    StateWalker w(g.link);
    for (long long s = 0; s < total; ++s) {
      auto mask = static_cast<std::uint64_t>(s);
      int zeros = n - __builtin_popcountll(mask);
      hist[zeros][w.circles(mask) + d.free_circles()]++;
    }
    return hist;
  }

#pragma omp parallel
  {
    StateWalker w(g.link);
    StateHistogram local(n + 1, std::vector<std::uint64_t>(kmax, 0));
#pragma omp for schedule(static)
    for (long long s = 0; s < total; ++s) {
      auto mask = static_cast<std::uint64_t>(s);
      int zeros = n - __builtin_popcountll(mask);
      local[zeros][w.circles(mask) + d.free_circles()]++;
    }
#pragma omp critical
    for (int a = 0; a <= n; ++a)
      for (int k = 0; k < kmax; ++k) hist[a][k] += local[a][k];
  }
  return hist;
}

LaurentPoly1 kauffman_bracket(const PlanarDiagram& d, const JonesOptions& opt) {
  const int n = static_cast<int>(d.size());
  check_cap("bracket", n, opt.cap);
  const StateHistogram hist = state_histogram(d, opt.mode);
  // circle weight -A^2 - A^-2
  const LaurentPoly1 delta = LaurentPoly1::monomial(Var::A, 2, -1) + LaurentPoly1::monomial(Var::A, -2, -1);
  std::vector<LaurentPoly1> delta_pow{LaurentPoly1::constant(Var::A, 1)};
  LaurentPoly1 out(Var::A);
  for (int a = 0; a <= n; ++a) {
    LaurentPoly1 by_circles(Var::A);
    for (std::size_t k = 1; k < hist[a].size(); ++k) {
      if (hist[a][k] == 0) continue;
      while (delta_pow.size() < k) delta_pow.push_back(delta_pow.back() * delta);
      by_circles += delta_pow[k - 1] * Integer(hist[a][k]);
    }
    out += by_circles.shifted_half(2 * (2 * a - n));
  }
  return out;
}

LaurentPoly1 jones_from_bracket(const LaurentPoly1& bracket, int writhe) {
  LaurentPoly1 v(Var::t);
  const Integer sign = (writhe % 2 == 0) ? 1 : -1;
  for (const auto& [h, c] : bracket.terms()) {
    const int e = h / 2 - 3 * writhe;  // whole power of A
    if (h % 2 != 0 || e % 2 != 0) throw std::logic_error("bracket exponent incompatible with t = A^-4");
    v.add_term_half(-e / 2, c * sign);
  }
  return v;
}

LaurentPoly1 jones(const PlanarDiagram& d, const JonesOptions& opt) {
  return jones_from_bracket(kauffman_bracket(d, opt), d.writhe());
}

}  // namespace kanenobu
