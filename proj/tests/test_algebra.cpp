#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "kanenobu/algebra/laurent.hpp"
#include "kanenobu/algebra/sparse_matrix.hpp"

using namespace kanenobu;

namespace {

// Plain coefficient-vector convolution, lowest exponent first.
std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Rank by fraction Gaussian elimination on a dense copy.
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

SparseMatrixQ random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density, int range) {
  SparseMatrixQ m(rows, cols);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-range, range);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (u(rng) < density) m.add(i, j, Rational(v(rng), 1 + (v(rng) & 3)));
  return m;
}

std::vector<std::vector<Rational>> dense(const SparseMatrixQ& m) {
  std::vector<std::vector<Rational>> a(m.n_rows(), std::vector<Rational>(m.n_cols()));
  for (const auto& e : m.entries()) a[e.row][e.col] = e.value;
  return a;
}

LaurentPoly1 random_poly(std::mt19937& rng, Var v) {
  std::uniform_int_distribution<int> e(-6, 6), c(-5, 5);
  LaurentPoly1 p(v);
  for (int k = 0; k < 5; ++k) p.add_term_half(2 * e(rng), c(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent basics") {
  const LaurentPoly1 t = LaurentPoly1::monomial(Var::t, 1);
  const LaurentPoly1 ti = LaurentPoly1::monomial(Var::t, -1);
  const LaurentPoly1 s = t + ti;
  CHECK(poly_mul(s, s) == LaurentPoly1::from_coefficients(Var::t, -2, {1, 0, 2, 0, 1}));
  CHECK(s * LaurentPoly1::constant(Var::t, 1) == s);
  CHECK((s - s).is_zero());
  CHECK(s.pow(0) == LaurentPoly1::constant(Var::t, 1));
  CHECK(s.inverted() == s);
  CHECK(t.shifted_half(1).coeff_half(3) == 1);
  CHECK_FALSE(t.shifted_half(1).has_integral_exponents());
  CHECK(LaurentPoly1::from_coefficients(Var::x, 0, {0, 0, 3}).to_string() == "3x^2");
  CHECK_THROWS_AS(s * LaurentPoly1::monomial(Var::x, 1), std::logic_error);
}

TEST_CASE("square of the figure-eight Jones polynomial") {
  const std::vector<long long> v41{1, -1, 1, -1, 1};
  const std::vector<long long> sq = convolve(v41, v41);
  CHECK(sq == std::vector<long long>{1, -2, 3, -4, 5, -4, 3, -2, 1});
  const LaurentPoly1 p = LaurentPoly1::from_coefficients(Var::t, -2, {1, -1, 1, -1, 1});
  const LaurentPoly1 want = LaurentPoly1::from_coefficients(Var::t, -4, {1, -2, 3, -4, 5, -4, 3, -2, 1});
  CHECK(poly_mul(p, p) == want);
  CHECK(breadth(want) == 8);
}

TEST_CASE("breadth and degree") {
  CHECK(breadth(LaurentPoly1::constant(Var::t, 1)) == 0);
  CHECK(breadth(LaurentPoly1::monomial_half(Var::t, 5) + LaurentPoly1::monomial_half(Var::t, 1)) == 2);
  CHECK(breadth(LaurentPoly1::monomial_half(Var::t, 1) + LaurentPoly1::monomial_half(Var::t, 0)) == Rational(1, 2));
  CHECK(degree(LaurentPoly1::from_coefficients(Var::x, -1, {1, 0, 4})) == 1);
  CHECK_THROWS_AS(breadth(LaurentPoly1(Var::t)), std::domain_error);
  CHECK_THROWS_AS(degree(LaurentPoly1(Var::x)), std::domain_error);
}

TEST_CASE("breadth is additive under products") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly1 p = random_poly(rng, Var::t), q = random_poly(rng, Var::t);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(breadth(p * q) == breadth(p) + breadth(q));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly1 a = random_poly(rng, Var::q), b = random_poly(rng, Var::q), c = random_poly(rng, Var::q);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == LaurentPoly1(Var::q));
  }
}

TEST_CASE("no zero coefficients are stored") {
  LaurentPoly1 p(Var::t);
  p.add_term_half(2, 3);
  p.add_term_half(2, -3);
  CHECK(p.is_zero());
  LaurentPoly2 q = LaurentPoly2::monomial(1, 2, 4);
  q.add_term(1, 2, -4);
  CHECK(q.is_zero());
}

TEST_CASE("two-variable polynomials") {
  const LaurentPoly2 a = LaurentPoly2::monomial(1, 0), ai = LaurentPoly2::monomial(-1, 0);
  const LaurentPoly2 x = LaurentPoly2::monomial(0, 1);
  CHECK(a * ai == LaurentPoly2::constant(1));
  const LaurentPoly2 p = (a + ai) * x - LaurentPoly2::constant(1);
  CHECK(p.at_a_one() == LaurentPoly1::from_coefficients(Var::x, 0, {-1, 2}));
  CHECK(p.shifted(2, -1).coeff(3, 0) == 1);
  CHECK(p.pow(2) == p * p);
}

TEST_CASE("rank examples") {
  SparseMatrixQ id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.add(i, i, 1);
  CHECK(rank(id) == 3);
  CHECK(rank(SparseMatrixQ(4, 5)) == 0);
  SparseMatrixQ m(2, 2);
  m.add(0, 0, Rational(1, 2));
  m.add(0, 1, 1);
  m.add(1, 0, 1);
  m.add(1, 1, 2);
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(m.add(2, 0, 1), std::out_of_range);
}

TEST_CASE("sparse rank agrees with dense elimination") {
  std::mt19937 rng(3);
  for (int k = 0; k < 150; ++k) {
    const std::size_t r = 1 + rng() % 14, c = 1 + rng() % 14;
    const SparseMatrixQ m = random_matrix(rng, r, c, 0.1 + 0.05 * (k % 8), 3);
    const std::size_t want = oracle_rank(dense(m));
    CHECK(rank(m) == want);
    CHECK(rank_dense(m) == want);
    CHECK(rank(m) <= std::min(r, c));
    CHECK(rank(m.transposed()) == want);
  }
}

TEST_CASE("rank survives 64-bit overflow") {
  // entries around 2^40 force the arbitrary-precision retry
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    SparseMatrixQ m(8, 8);
    std::uniform_int_distribution<long long> v(-(1LL << 40), 1LL << 40);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if ((rng() & 1) == 0) m.add(i, j, Integer(v(rng)));
    // duplicate a combination to make the rank deficient
    SparseMatrixQ n(9, 8);
    for (const auto& e : m.entries()) {
      n.add(e.row, e.col, e.value);
      if (e.row < 2) n.add(8, e.col, e.value * 3);
    }
    CHECK(rank(n) == oracle_rank(dense(n)));
  }
}

TEST_CASE("rank properties") {
  std::mt19937 rng(9);
  for (int k = 0; k < 60; ++k) {
    const std::size_t r = 2 + rng() % 10, c = 2 + rng() % 10;
    const SparseMatrixQ m = random_matrix(rng, r, c, 0.35, 4);
    const std::size_t rk = rank(m);
    // free columns of the oracle elimination
    const std::size_t nullity = c - oracle_rank(dense(m));
    CHECK(rk + nullity == c);

    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SparseMatrixQ permuted(r, c), scaled(r, c);
    for (const auto& e : m.entries()) {
      permuted.add(perm[e.row], e.col, e.value);
      scaled.add(e.row, e.col, e.value * Rational(static_cast<int>(e.row) + 2, 3));
    }
    CHECK(rank(permuted) == rk);
    CHECK(rank(scaled) == rk);
  }
}

TEST_CASE("integer rows") {
  SparseRowsZ z;
  z.n_cols = 3;
  z.rows = {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, -1}}};
  CHECK(rank(z) == 2);
  z.rows.push_back({{2, 5}, {2, -5}});
  CHECK(rank(z) == 2);
  z.rows.push_back({{3, 1}});
  CHECK_THROWS_AS(rank(z), std::out_of_range);
}
