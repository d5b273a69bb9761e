#include "kanenobu/khovanov/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kanenobu/diagram/operations.hpp"

namespace kanenobu {

long long BigradedDims::at(int i, int j) const {
  auto it = cells.find({i, j});
  return it == cells.end() ? 0 : it->second;
}

void BigradedDims::add(int i, int j, long long d) {
  if (d == 0) return;
  auto& v = cells[{i, j}];
  v += d;
  if (v == 0) cells.erase({i, j});
}

long long BigradedDims::total() const {
  long long s = 0;
  for (const auto& [_, d] : cells) s += d;
  return s;
}

long long BigradedDims::max_cell() const {
  long long m = 0;
  for (const auto& [_, d] : cells) m = std::max(m, d);
  return m;
}

BigradedDims BigradedDims::shifted(int di, int dj) const {
  BigradedDims out;
  out.components = components;
  for (const auto& [ij, d] : cells) out.cells[{ij.first + di, ij.second + dj}] = d;
  return out;
}

std::string BigradedDims::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, d] : cells) {
    os << (first ? "" : " ") << "(" << ij.first << "," << ij.second << "):" << d;
    first = false;
  }
  return os.str();
}

LaurentPoly1 graded_euler(const BigradedDims& dims) {
  LaurentPoly1 out(Var::q);
  for (const auto& [ij, d] : dims.cells) out.add_term_half(2 * ij.second, Integer(ij.first % 2 == 0 ? d : -d));
  return out;
}

bool euler_check(const BigradedDims& dims, const LaurentPoly1& jones) {
  LaurentPoly1 v(Var::q);
  for (const auto& [h, c] : jones.terms()) v.add_term_half(2 * h, h % 2 == 0 ? c : Integer(-c));
  const LaurentPoly1 quantum = LaurentPoly1::monomial(Var::q, 1) + LaurentPoly1::monomial(Var::q, -1);
  return graded_euler(dims) == quantum * v;
}

std::optional<int> thinness_s(const BigradedDims& dims) {
  std::set<int> diag;
  for (const auto& [ij, _] : dims.cells) diag.insert(ij.second - 2 * ij.first);
  if (diag.size() != 2 || *diag.rbegin() - *diag.begin() != 2) return std::nullopt;
  return *diag.begin() + 1;
}

bool knight_move_check(const BigradedDims& dims, int s) {
  int lo = 0, hi = 0;
  for (const auto& [ij, _] : dims.cells) {
    const int delta = ij.second - 2 * ij.first;
    if (delta != s - 1 && delta != s + 1) return false;
    lo = std::min(lo, ij.first);
    hi = std::max(hi, ij.first);
  }
  // pair (i, 2i+s-1) with (i+1, 2i+s+3)
  for (int i = lo - 1; i <= hi; ++i) {
    const long long low = dims.at(i, 2 * i + s - 1), up = dims.at(i + 1, 2 * i + s + 3);
    const long long extra = (i == 0 || i == -1) ? 1 : 0;
    if (i == 0 ? low != up + extra : i == -1 ? up != low + extra : low != up) return false;
  }
  return true;
}

bool les_subadditivity_check(const PlanarDiagram& d, int c, const HomologyOptions& opt) {
  const BigradedDims h = raw_homology_dims(d, opt);
  const BigradedDims h0 = raw_homology_dims(resolve(d, c, 0), opt);
  const BigradedDims h1 = raw_homology_dims(resolve(d, c, 1), opt);
  for (const auto& [ij, dim] : h.cells)
    if (dim > h0.at(ij.first, ij.second) + h1.at(ij.first - 1, ij.second - 1)) return false;
  return true;
}

BigradedDims kunneth(const BigradedDims& a, const BigradedDims& b) {
  BigradedDims out;
  out.components = a.components + b.components;
  for (const auto& [x, da] : a.cells)
    for (const auto& [y, db] : b.cells) out.add(x.first + y.first, x.second + y.second, da * db);
  return out;
}

BigradedDims mirror_dual(const BigradedDims& dims) {
  BigradedDims out;
  out.components = dims.components;
  for (const auto& [ij, d] : dims.cells) out.cells[{-ij.first, -ij.second}] = d;
  return out;
}

}  // namespace kanenobu
