#include "kanenobu/algebra/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kanenobu {

char var_name(Var v) {
  switch (v) {
    case Var::A: return 'A';
    case Var::t: return 't';
    case Var::q: return 'q';
    case Var::x: return 'x';
  }
  return '?';
}

LaurentPoly1 LaurentPoly1::constant(Var v, const Integer& c) { return monomial_half(v, 0, c); }

LaurentPoly1 LaurentPoly1::monomial(Var v, int exponent, const Integer& c) {
  return monomial_half(v, 2 * exponent, c);
}

LaurentPoly1 LaurentPoly1::monomial_half(Var v, int half_exponent, const Integer& c) {
  LaurentPoly1 p(v);
  p.add_term_half(half_exponent, c);
  return p;
}

LaurentPoly1 LaurentPoly1::from_coefficients(Var v, int lowest, std::initializer_list<long long> coeffs) {
  LaurentPoly1 p(v);
  int e = lowest;
  for (long long c : coeffs) p.add_term_half(2 * e++, c);
  return p;
}

Integer LaurentPoly1::coeff_half(int half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly1::min_half() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly1::max_half() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

bool LaurentPoly1::has_integral_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

void LaurentPoly1::add_term_half(int half_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly1::check_var(const LaurentPoly1& o) const {
  if (var_ != o.var_)
    throw std::logic_error(std::string("variable mismatch: ") + var_name(var_) + " vs " + var_name(o.var_));
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  check_var(o);
  for (const auto& [e, c] : o.terms_) add_term_half(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  check_var(o);
  for (const auto& [e, c] : o.terms_) add_term_half(e, -c);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  a.check_var(b);
  LaurentPoly1 r(a.var_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) r.add_term_half(e + f, c * d);
  return r;
}

LaurentPoly1& LaurentPoly1::operator*=(const LaurentPoly1& o) { return *this = *this * o; }

LaurentPoly1& LaurentPoly1::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly1 LaurentPoly1::pow(unsigned k) const {
  LaurentPoly1 r = constant(var_, 1), base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

LaurentPoly1 LaurentPoly1::inverted() const {
  LaurentPoly1 r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly1 LaurentPoly1::shifted_half(int half) const {
  LaurentPoly1 r(var_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + half, c);
  return r;
}

LaurentPoly1 LaurentPoly1::retagged(Var v) const {
  LaurentPoly1 r(*this);
  r.var_ = v;
  return r;
}

std::string LaurentPoly1::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var_name(var_);
    if (e % 2 == 0) {
      if (e != 2) os << '^' << e / 2;
    } else {
      os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

LaurentPoly1 poly_mul(const LaurentPoly1& p, const LaurentPoly1& q) { return p * q; }

Rational breadth(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("breadth of the zero polynomial");
  return Rational(p.max_half() - p.min_half(), 2);
}

Rational degree(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("degree of the zero polynomial");
  return Rational(p.max_half(), 2);
}

LaurentPoly2 LaurentPoly2::constant(const Integer& c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int ea, int ex, const Integer& c) {
  LaurentPoly2 p;
  p.add_term(ea, ex, c);
  return p;
}

Integer LaurentPoly2::coeff(int ea, int ex) const {
  auto it = terms_.find({ea, ex});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly2::add_term(int ea, int ex, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{ea, ex}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [k, c] : a.terms_)
    for (const auto& [l, d] : b.terms_) r.add_term(k.first + l.first, k.second + l.second, c * d);
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) { return *this = *this * o; }

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
  LaurentPoly2 r = constant(1), base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int ea, int ex) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + ea, k.second + ex}, c);
  return r;
}

LaurentPoly1 LaurentPoly2::at_a_one() const {
  LaurentPoly1 r(Var::x);
  for (const auto& [k, c] : terms_) r.add_term_half(2 * k.second, c);
  return r;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = k.first == 0 && k.second == 0;
    if (mag != 1 || unit) os << mag;
    if (k.first != 0) {
      os << 'a';
      if (k.first != 1) os << '^' << k.first;
    }
    if (k.second != 0) {
      os << 'x';
      if (k.second != 1) os << '^' << k.second;
    }
  }
  return os.str();
}

}  // namespace kanenobu
