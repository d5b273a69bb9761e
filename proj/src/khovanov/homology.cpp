#include "kanenobu/khovanov/homology.hpp"

#include <map>
#include <stdexcept>

namespace kanenobu {

namespace {

struct Block {
  int r;
  int q;
  SparseRowsZ rows;
  std::size_t rank = 0;
};

}  // namespace

BigradedDims raw_homology(const GradedComplex& c, Parallelism mode) {
  const int top = static_cast<int>(c.generators.size());
  // local index of each generator inside its (r, q) block, and block sizes
  std::vector<std::vector<std::uint32_t>> local(top);
  std::vector<std::map<int, std::uint32_t>> size(top);
  for (int r = 0; r < top; ++r) {
    local[r].resize(c.generators[r].size());
    for (std::size_t g = 0; g < c.generators[r].size(); ++g) local[r][g] = size[r][c.generators[r][g].q]++;
  }

  std::vector<Block> blocks;
  std::vector<std::map<int, std::size_t>> where(top);
  for (int r = 0; r + 1 < top; ++r) {
    for (const auto& [q, count] : size[r]) {
      auto it = size[r + 1].find(q);
      if (it == size[r + 1].end()) continue;
      where[r][q] = blocks.size();
      Block b{r, q, {}, 0};
      b.rows.n_cols = it->second;
      b.rows.rows.resize(count);
      blocks.push_back(std::move(b));
    }
    for (const auto& e : c.differentials[r].entries()) {
      const int q = c.generators[r][e.col].q;
      if (c.generators[r + 1][e.row].q != q) throw std::logic_error("differential does not preserve q");
      if (denominator(e.value) != 1) throw std::logic_error("non-integral differential entry");
      auto& b = blocks[where[r].at(q)];
      b.rows.rows[local[r][e.col]].push_back({local[r + 1][e.row], static_cast<std::int64_t>(numerator(e.value))});
    }
  }

  const long nb = static_cast<long>(blocks.size());
  if (mode == Parallelism::OpenMP) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < nb; ++k) blocks[k].rank = rank(blocks[k].rows);
  } else {
    for (long k = 0; k < nb; ++k) blocks[k].rank = rank(blocks[k].rows);
  }

  BigradedDims out;
  out.components = c.components;
  for (int r = 0; r < top; ++r) {
    for (const auto& [q, count] : size[r]) {
      long long dim = count;
      if (auto it = where[r].find(q); it != where[r].end()) dim -= blocks[it->second].rank;
      if (r > 0)
        if (auto it = where[r - 1].find(q); it != where[r - 1].end()) dim -= blocks[it->second].rank;
      out.add(r, q, dim);
    }
  }
  return out;
}

BigradedDims normalize(const BigradedDims& raw, const GradedComplex& c) {
  return raw.shifted(-c.n_minus, c.n_plus - 2 * c.n_minus);
}

BigradedDims homology_dims(const PlanarDiagram& d, const HomologyOptions& opt) {
  const GradedComplex c = build_complex(d, {opt.cap, Frobenius::Khovanov});
  return normalize(raw_homology(c, opt.mode), c);
}

BigradedDims raw_homology_dims(const PlanarDiagram& d, const HomologyOptions& opt) {
  return raw_homology(build_complex(d, {opt.cap, Frobenius::Khovanov}), opt.mode);
}

}  // namespace kanenobu
