#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

namespace kanenobu {

struct CrossingNumberResult {
  enum class Kind { Exact, Bounds };
  Kind kind = Kind::Exact;
  int exact = 0;
  int lo = 0;
  int hi = 0;
  std::optional<int> conjectured;
  std::string note;

  static CrossingNumberResult make_exact(int n, std::string note);
  static CrossingNumberResult make_bounds(int lo, int hi, std::optional<int> conjectured, std::string note);

  bool is_exact() const { return kind == Kind::Exact; }
  friend bool operator==(const CrossingNumberResult& a, const CrossingNumberResult& b) {
    return a.kind == b.kind && a.exact == b.exact && a.lo == b.lo && a.hi == b.hi && a.conjectured == b.conjectured;
  }
};

CrossingNumberResult crossing_number(int p, int q);

// (p,q) with K(p,q) alternating.
const std::set<std::pair<int, int>>& alternating_exceptions();

}  // namespace kanenobu
