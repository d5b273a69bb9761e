#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kanenobu/algebra/numbers.hpp"

namespace kanenobu {

// Sparse matrix over the rationals. Entries added at the same position are
// summed; zero results are dropped.
class SparseMatrixQ {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseMatrixQ() = default;
  SparseMatrixQ(std::size_t n_rows, std::size_t n_cols) : n_rows_(n_rows), n_cols_(n_cols) {}

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  // Throws std::out_of_range for indices outside the shape.
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;

  // Sorted by (row, col), no zeros.
  std::vector<Entry> entries() const;
  std::size_t nonzeros() const;

  SparseMatrixQ transposed() const;
  // Row-major product this * other.
  SparseMatrixQ operator*(const SparseMatrixQ& other) const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
};

// Integer sparse rows: each row is a list of (column, value), any order.
struct SparseRowsZ {
  std::size_t n_cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

// Exact rank over Q. Deterministic: eliminates each connected block of the
// row/column incidence graph separately, unit pivots first, with 64-bit
// arithmetic and an arbitrary-precision retry when a block overflows.
std::size_t rank(const SparseMatrixQ& m);
std::size_t rank(const SparseRowsZ& m);

// Dense rational elimination; reference for the sparse path.
std::size_t rank_dense(const SparseMatrixQ& m);

}  // namespace kanenobu
