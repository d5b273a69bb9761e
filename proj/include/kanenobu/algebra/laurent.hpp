#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "kanenobu/algebra/numbers.hpp"

namespace kanenobu {

enum class Var { A, t, q, x };

char var_name(Var v);

// One-variable Laurent polynomial with integer coefficients. Exponents are
// stored in half-units: key e stands for var^(e/2).
class LaurentPoly1 {
 public:
  using Terms = std::map<int, Integer>;

  explicit LaurentPoly1(Var v = Var::t) : var_(v) {}

  static LaurentPoly1 constant(Var v, const Integer& c);
  static LaurentPoly1 monomial(Var v, int exponent, const Integer& c = 1);
  static LaurentPoly1 monomial_half(Var v, int half_exponent, const Integer& c = 1);
  // Coefficients of var^lowest, var^(lowest+1), ... in whole units.
  static LaurentPoly1 from_coefficients(Var v, int lowest, std::initializer_list<long long> coeffs);

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff_half(int half_exponent) const;
  Integer coeff(int exponent) const { return coeff_half(2 * exponent); }
  int min_half() const;
  int max_half() const;
  bool has_integral_exponents() const;

  void add_term_half(int half_exponent, const Integer& c);

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const LaurentPoly1& o);
  LaurentPoly1& operator*=(const Integer& c);
  LaurentPoly1 operator-() const;

  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  friend LaurentPoly1 operator*(LaurentPoly1 a, const Integer& c) { return a *= c; }
  friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  LaurentPoly1 pow(unsigned k) const;
  // var -> var^-1
  LaurentPoly1 inverted() const;
  // Multiply by var^(half/2).
  LaurentPoly1 shifted_half(int half) const;
  // Same terms under another variable tag.
  LaurentPoly1 retagged(Var v) const;

  std::string to_string() const;

 private:
  void check_var(const LaurentPoly1& o) const;

  Var var_;
  Terms terms_;
};

LaurentPoly1 poly_mul(const LaurentPoly1& p, const LaurentPoly1& q);

// max exponent - min exponent in whole units; throws std::domain_error on 0.
Rational breadth(const LaurentPoly1& p);

// Highest exponent in whole units; throws std::domain_error on 0.
Rational degree(const LaurentPoly1& p);

// Two-variable Laurent polynomial in (a, x) with integer exponents.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Integer>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Integer& c);
  static LaurentPoly2 monomial(int ea, int ex, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int ea, int ex) const;
  void add_term(int ea, int ex, const Integer& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  LaurentPoly2 operator-() const;

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

  LaurentPoly2 pow(unsigned k) const;
  // Multiply by a^ea x^ex.
  LaurentPoly2 shifted(int ea, int ex) const;
  // Specialize a = 1; result in x.
  LaurentPoly1 at_a_one() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace kanenobu
