#pragma once

#include <cstdint>
#include <vector>

#include "kanenobu/algebra/sparse_matrix.hpp"
#include "kanenobu/diagram/planar_diagram.hpp"

namespace kanenobu {

// Rank-two Frobenius algebras on {1, X}: Khovanov has X^2 = 0, Lee X^2 = 1.
enum class Frobenius { Khovanov, Lee };

struct ComplexOptions {
  int cap = 14;
  Frobenius algebra = Frobenius::Khovanov;
};

// Generator: a cube vertex with a label per circle (bit set = X).
// q is the raw quantum grading #1 - #X + |v|.
struct Generator {
  std::uint32_t vertex;
  std::uint32_t labels;
  int q;
};

// Cube complex in raw grading: degree r holds the vertices with r
// 1-smoothings, generators ordered by vertex then labels.
// differentials[r] maps degree r to r + 1 (rows index the target).
struct GradedComplex {
  int crossings = 0;
  int n_plus = 0;   // y(D)
  int n_minus = 0;  // x(D)
  int components = 1;
  Frobenius algebra = Frobenius::Khovanov;
  std::vector<std::vector<Generator>> generators;
  std::vector<SparseMatrixQ> differentials;

  // Normalized bigrading of raw degree r and quantum grading q.
  int normal_i(int r) const { return r - n_minus; }
  int normal_j(int q) const { return q + n_plus - 2 * n_minus; }
};

// Throws CapExceeded above opt.cap.
GradedComplex build_complex(const PlanarDiagram& d, const ComplexOptions& opt = {});

}  // namespace kanenobu
