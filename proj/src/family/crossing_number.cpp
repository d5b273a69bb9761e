#include "kanenobu/family/crossing_number.hpp"

#include <cstdlib>

namespace kanenobu {

CrossingNumberResult CrossingNumberResult::make_exact(int n, std::string note) {
  CrossingNumberResult r;
  r.kind = Kind::Exact;
  r.exact = r.lo = r.hi = n;
  r.note = std::move(note);
  return r;
}

CrossingNumberResult CrossingNumberResult::make_bounds(int lo, int hi, std::optional<int> conjectured,
                                                       std::string note) {
  CrossingNumberResult r;
  r.kind = Kind::Bounds;
  r.lo = lo;
  r.hi = hi;
  r.conjectured = conjectured;
  r.note = std::move(note);
  return r;
}

CrossingNumberResult crossing_number(int p, int q) {
  const int ap = std::abs(p), aq = std::abs(q), m = ap + aq;
  const long long pq = static_cast<long long>(p) * q;
  if (pq < 0 && m == 2) return CrossingNumberResult::make_exact(m + 6, "pq < 0 and |p|+|q| = 2");
  if (pq < 0 && ((ap == 1) != (aq == 1)))
    return CrossingNumberResult::make_exact(m + 7, "pq < 0 and exactly one of |p|, |q| is 1");
  if (pq == 0 && m == 1) return CrossingNumberResult::make_exact(m + 7, "pq = 0 and |p|+|q| = 1");
  if (pq > 0) return CrossingNumberResult::make_exact(m + 8, "pq > 0");
  if (pq == 0) return CrossingNumberResult::make_exact(m + 8, "pq = 0 and |p|+|q| != 1");
  return CrossingNumberResult::make_bounds(
      m + 7, m + 8, m + 8,
      "pq < 0 and |p|, |q| >= 2: bounds only; conjectured value |p|+|q|+8, "
      "while the conjecture itself is stated as c <= |p|+|q|+8");
}

const std::set<std::pair<int, int>>& alternating_exceptions() {
  static const std::set<std::pair<int, int>> s{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}, {-1, 1}};
  return s;
}

}  // namespace kanenobu
