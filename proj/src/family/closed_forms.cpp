#include "kanenobu/family/closed_forms.hpp"

#include <cstdlib>

namespace kanenobu {

LaurentPoly1 jones_closed_form(int p, int q) {
  const int s = p + q;
  const LaurentPoly1 one = LaurentPoly1::constant(Var::t, 1);
  const LaurentPoly1 v00 = LaurentPoly1::from_coefficients(Var::t, -4, {1, -2, 3, -4, 5, -4, 3, -2, 1});
  return (v00 - one).shifted_half(2 * s) * Integer(s % 2 == 0 ? 1 : -1) + one;
}

int breadth_closed_form(int p, int q) {
  const int s = std::abs(p + q);
  return s > 4 ? s + 4 : 8;
}

LaurentPoly1 chebyshev_s(int k) {
  if (k < 0) return LaurentPoly1(Var::x);
  const LaurentPoly1 x = LaurentPoly1::monomial(Var::x, 1);
  LaurentPoly1 prev(Var::x), cur = LaurentPoly1::constant(Var::x, 1);
  for (int i = 1; i <= k; ++i) {
    LaurentPoly1 next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly1 sigma(int n) {
  if (n == 0) return LaurentPoly1(Var::x);
  LaurentPoly1 s = chebyshev_s(std::abs(n) - 1);
  return n > 0 ? s : -s;
}

LaurentPoly1 q_8_8() { return LaurentPoly1::from_coefficients(Var::x, 0, {1, 4, 6, -10, -14, 4, 8, 2}); }

LaurentPoly1 q_8_9() { return LaurentPoly1::from_coefficients(Var::x, 0, {-7, 4, 16, -10, -16, 4, 8, 2}); }

LaurentPoly1 q_closed_form(int p, int q) {
  const LaurentPoly1 one = LaurentPoly1::constant(Var::x, 1);
  const LaurentPoly1 x_inv = LaurentPoly1::monomial(Var::x, -1);
  LaurentPoly1 out = -(sigma(p) * sigma(q) * (q_8_9() - one));
  out += x_inv * (sigma(p + 1) * sigma(q + 1) + sigma(p - 1) * sigma(q - 1)) * (q_8_8() - one);
  return out + one;
}

int q_degree_closed_form(int p, int q) {
  const int base = std::abs(p) + std::abs(q);
  return p * q >= 0 ? base + 6 : base + 5;
}

}  // namespace kanenobu
