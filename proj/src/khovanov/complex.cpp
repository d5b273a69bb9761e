#include "kanenobu/khovanov/complex.hpp"

#include <utility>

#include "kanenobu/diagram/limits.hpp"
#include "kanenobu/khovanov/cube.hpp"

namespace kanenobu {

namespace {

// Images of one generator under an edge map, with coefficients.
int apply(const ResolutionCube::Edge& e, std::uint32_t mask, Frobenius alg, std::pair<std::uint32_t, int> out[2]) {
  std::uint32_t base = 0;
  for (std::size_t i = 0; i < e.carry.size(); ++i)
    if (e.carry[i] >= 0 && ((mask >> i) & 1u)) base |= 1u << e.carry[i];
  const bool xa = (mask >> e.a) & 1u;
  if (e.merge) {
    const bool xb = (mask >> e.b) & 1u;
    if (!xa && !xb) {
      out[0] = {base, 1};
      return 1;
    }
    if (xa != xb) {
      out[0] = {base | (1u << e.dst_a), 1};
      return 1;
    }
    if (alg == Frobenius::Lee) {
      out[0] = {base, 1};
      return 1;
    }
    return 0;
  }
  if (!xa) {
    out[0] = {base | (1u << e.dst_b), 1};
    out[1] = {base | (1u << e.dst_a), 1};
    return 2;
  }
  out[0] = {base | (1u << e.dst_a) | (1u << e.dst_b), 1};
  if (alg == Frobenius::Lee) {
    out[1] = {base, 1};
    return 2;
  }
  return 1;
}

}  // namespace

GradedComplex build_complex(const PlanarDiagram& d, const ComplexOptions& opt) {
  const int n = static_cast<int>(d.size());
  check_cap("cube", n, opt.cap);
  const ResolutionCube cube(d);

  GradedComplex cx;
  cx.crossings = n;
  cx.n_plus = d.positive_crossings();
  cx.n_minus = d.negative_crossings();
  cx.components = d.components();
  cx.algebra = opt.algebra;
  cx.generators.resize(n + 1);

  std::vector<std::size_t> offset(cube.vertices());
  for (std::uint32_t v = 0; v < cube.vertices(); ++v) {
    const int r = __builtin_popcount(v);
    auto& gens = cx.generators[r];
    offset[v] = gens.size();
    const int k = cube.circles(v);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
      gens.push_back({v, mask, k - 2 * __builtin_popcount(mask) + r});
  }

  for (int r = 0; r < n; ++r) {
    SparseMatrixQ m(cx.generators[r + 1].size(), cx.generators[r].size());
    for (std::uint32_t v = 0; v < cube.vertices(); ++v) {
      if (__builtin_popcount(v) != r) continue;
      for (int c = 0; c < n; ++c) {
        if ((v >> c) & 1u) continue;
        const auto e = cube.edge(v, c);
        const std::size_t to = offset[v | (1u << c)];
        std::pair<std::uint32_t, int> img[2];
        for (std::uint32_t mask = 0; mask < (1u << cube.circles(v)); ++mask) {
          const int cnt = apply(e, mask, opt.algebra, img);
          for (int t = 0; t < cnt; ++t) m.add(to + img[t].first, offset[v] + mask, Rational(e.sign * img[t].second));
        }
      }
    }
    cx.differentials.push_back(std::move(m));
  }
  return cx;
}

}  // namespace kanenobu
