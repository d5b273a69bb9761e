#include "kanenobu/khovanov/lee.hpp"

#include "kanenobu/algebra/sparse_matrix.hpp"
#include "kanenobu/khovanov/complex.hpp"

namespace kanenobu {

std::vector<int> lee_degrees(const PlanarDiagram& d, int cap) {
  const GradedComplex c = build_complex(d, {cap, Frobenius::Lee});
  const int top = static_cast<int>(c.generators.size());
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t r = 0; r < ranks.size(); ++r) ranks[r] = rank(c.differentials[r]);
  std::vector<int> out;
  for (int r = 0; r < top; ++r) {
    std::size_t dim = c.generators[r].size();
    if (r < top - 1) dim -= ranks[r];
    if (r > 0) dim -= ranks[r - 1];
    out.insert(out.end(), dim, c.normal_i(r));
  }
  return out;
}

}  // namespace kanenobu
