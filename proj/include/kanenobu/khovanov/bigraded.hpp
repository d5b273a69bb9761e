#pragma once

#include <map>
#include <string>
#include <utility>

namespace kanenobu {

// Finite map (i, j) -> dimension; zero cells are not stored.
struct BigradedDims {
  std::map<std::pair<int, int>, long long> cells;
  int components = 1;

  long long at(int i, int j) const;
  void add(int i, int j, long long d);
  long long total() const;
  long long max_cell() const;
  // Cells (i, j) -> (i + di, j + dj).
  BigradedDims shifted(int di, int dj) const;
  std::string to_string() const;

  friend bool operator==(const BigradedDims& a, const BigradedDims& b) { return a.cells == b.cells; }
};

}  // namespace kanenobu
