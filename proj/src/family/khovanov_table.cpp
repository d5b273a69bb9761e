#include "kanenobu/family/khovanov_table.hpp"

#include <initializer_list>
#include <set>
#include <tuple>

namespace kanenobu {

namespace {

BigradedDims table(std::initializer_list<std::tuple<int, int, long long>> cells) {
  BigradedDims out;
  for (const auto& [i, j, d] : cells) out.add(i, j, d);
  return out;
}

BigradedDims reflect(const BigradedDims& t) {
  BigradedDims out;
  for (const auto& [ij, d] : t.cells) out.add(-ij.first, -ij.second, d);
  return out;
}

}  // namespace

BigradedDims figure_eight_table() {
  return table({{-2, -5, 1}, {-1, -1, 1}, {0, -1, 1}, {0, 1, 1}, {1, 1, 1}, {2, 5, 1}});
}

BigradedDims k00_table() {
  return table({{-4, -9, 1}, {-3, -7, 1}, {-3, -5, 1}, {-2, -5, 2}, {-2, -3, 1}, {-1, -3, 2}, {-1, -1, 2},
                {0, -1, 3},  {0, 1, 3},   {1, 1, 2},   {1, 3, 2},   {2, 3, 1},   {2, 5, 2},   {3, 5, 1},
                {3, 7, 1},   {4, 9, 1}});
}

BigradedDims split_figure_eight_table() {
  BigradedDims t = table({{-4, -10, 1}, {-3, -6, 2}, {-2, -6, 2}, {-2, -4, 2}, {-2, -2, 1}, {-1, -4, 2}, {-1, -2, 2},
                          {-1, 0, 2},   {0, -2, 1},  {0, 0, 6},   {0, 2, 1},   {1, 0, 2},   {1, 2, 2},   {1, 4, 2},
                          {2, 2, 1},    {2, 4, 2},   {2, 6, 2},   {3, 6, 2},   {4, 10, 1}});
  t.components = 2;
  return t;
}

BigradedDims khovanov_closed_form(int p, int q) {
  const int s = p + q;
  const BigradedDims t0 = k00_table();
  BigradedDims out = t0.shifted(s, 2 * s);
  if (s == 0) return out;
  out.add(0, 1, 1);
  out.add(0, -1, 1);
  out.add(s, 2 * s + 1, -1);
  out.add(s, 2 * s - 1, -1);
  return out;
}

BigradedDims khovanov_closed_form_original(int p, int q) {
  const int s = p + q;
  const BigradedDims t0 = k00_table();
  if (s == 0) return t0;
  if (s > 0) return reflect(khovanov_closed_form_original(-s, 0));
  auto cell = [&](int i, int j) -> long long {
    if (i == s && j == 2 * s + 1) return t0.at(0, 1) - 1;
    if (i == s && j == 2 * s - 1) return t0.at(0, -1) - 1;
    if (i == 0 && j == 1) return t0.at(-s, -2 * s - 1) + 1;
    if (i == 0 && j == -1) return t0.at(-s, -2 * s + 1) + 1;
    if (s != -1 && i == -1 && j == -3) return t0.at(-s - 1, -2 * s - 3);
    if (s != -1 && i == -1 && j == -1) return t0.at(-s - 1, -2 * s - 1);
    return t0.at(i + s, j + 2 * s);
  };
  // generic support is T0 shifted by (-s, -2s); add the override cells
  BigradedDims out;
  std::set<std::pair<int, int>> support;
  for (const auto& [ij, _] : t0.cells) support.insert({ij.first - s, ij.second - 2 * s});
  for (auto ij : {std::pair{0, 1}, {0, -1}, {-1, -3}, {-1, -1}, {s, 2 * s + 1}, {s, 2 * s - 1}}) support.insert(ij);
  for (const auto& [i, j] : support) out.add(i, j, cell(i, j));
  return out;
}

}  // namespace kanenobu
