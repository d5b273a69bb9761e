#include <doctest.h>

#include "kanenobu/diagram/kanenobu_diagram.hpp"
#include "kanenobu/diagram/operations.hpp"
#include "kanenobu/diagram/pd_io.hpp"
#include "kanenobu/family/audit.hpp"
#include "kanenobu/family/closed_forms.hpp"
#include "kanenobu/family/crossing_number.hpp"
#include "kanenobu/family/khovanov_table.hpp"
#include "kanenobu/khovanov/homology.hpp"
#include "kanenobu/khovanov/structure.hpp"
#include "kanenobu/polyinv/jones.hpp"
#include "kanenobu/polyinv/kauffman.hpp"

using namespace kanenobu;

namespace {

PlanarDiagram fixture(const std::string& name) { return read_pd_file(std::string(KN_FIXTURES) + "/" + name); }

LaurentPoly1 xpoly(std::initializer_list<long long> c) { return LaurentPoly1::from_coefficients(Var::x, 0, c); }

// Direct coefficient product, lowest degree first.
std::vector<long long> square(const std::vector<long long>& a) {
  std::vector<long long> out(2 * a.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i + j] += a[i] * a[j];
  return out;
}

CrossingNumberResult exact(int n) { return CrossingNumberResult::make_exact(n, ""); }
CrossingNumberResult bounds(int lo, int hi, int conj) { return CrossingNumberResult::make_bounds(lo, hi, conj, ""); }

}  // namespace

TEST_CASE("jones closed form examples") {
  CHECK(jones_closed_form(0, 0) == LaurentPoly1::from_coefficients(Var::t, -4, {1, -2, 3, -4, 5, -4, 3, -2, 1}));
  CHECK(jones_closed_form(1, -1) == jones_closed_form(0, 0));
  for (int p = -4; p <= 4; ++p)
    for (int q = -4; q <= 4; ++q) CHECK(jones_closed_form(p, q) == jones_closed_form(q, p));
  // mirror: t -> t^-1 and (p,q) -> (-p,-q)
  CHECK(jones_closed_form(-2, -1) == jones_closed_form(2, 1).inverted());
}

TEST_CASE("jones closed form matches generated diagrams") {
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(jones(kanenobu_diagram(p, q)) == jones_closed_form(p, q));
    }
}

TEST_CASE("breadth closed form") {
  CHECK(breadth_closed_form(0, 0) == 8);
  CHECK(breadth_closed_form(5, 0) == 9);
  CHECK(breadth_closed_form(10, -3) == 11);
  CHECK(breadth_closed_form(-7, 0) == 11);
  for (int p = -8; p <= 8; ++p)
    for (int q = -8; q <= 8; ++q) CHECK(breadth(jones_closed_form(p, q)) == breadth_closed_form(p, q));
}

TEST_CASE("sigma") {
  CHECK(sigma(0).is_zero());
  CHECK(sigma(1) == xpoly({1}));
  CHECK(sigma(2) == xpoly({0, 1}));
  CHECK(sigma(-3) == xpoly({1, 0, -1}));
  CHECK(chebyshev_s(-1).is_zero());
  CHECK(chebyshev_s(0) == xpoly({1}));
  for (int n = 1; n <= 8; ++n) {
    CHECK(sigma(-n) == -sigma(n));
    CHECK(degree(sigma(n)) == n - 1);
    // sigma_{n+1} = x sigma_n - sigma_{n-1}
    CHECK(sigma(n + 1) == xpoly({0, 1}) * sigma(n) - sigma(n - 1));
  }
}

TEST_CASE("Q closed form examples") {
  CHECK(q_closed_form(0, 0) == xpoly({9, 12, -20, -28, 8, 16, 4}));
  const std::vector<long long> q41{-3, -2, 4, 2};
  const std::vector<long long> sq = square(q41);
  CHECK(q_closed_form(0, 0) == LaurentPoly1::from_coefficients(Var::x, 0, {sq[0], sq[1], sq[2], sq[3], sq[4], sq[5], sq[6]}));
  CHECK(degree(q_closed_form(1, -1)) == 7);
  CHECK(degree(q_closed_form(2, 3)) == 11);
  CHECK(q_degree_closed_form(0, 0) == 6);
  CHECK(q_degree_closed_form(-2, -2) == 10);
  for (int m = 1; m <= 6; ++m) CHECK(q_degree_closed_form(m, -1) == m + 6);
  for (int p = -5; p <= 5; ++p)
    for (int q = -5; q <= 5; ++q) {
      const LaurentPoly1 f = q_closed_form(p, q);
      CHECK(f.min_half() >= 0);
      CHECK(degree(f) == q_degree_closed_form(p, q));
      CHECK(f == q_closed_form(q, p));
      CHECK(f == q_closed_form(-p, -q));
    }
}

TEST_CASE("Q closed form matches generated diagrams") {
  CHECK(q_polynomial(fixture("8_8.pd")) == q_8_8());
  CHECK(q_polynomial(fixture("8_9.pd")) == q_8_9());
  KauffmanEngine engine;
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const PlanarDiagram d = kanenobu_diagram(p, q);
      const LaurentPoly1 got = engine.lambda(d).shifted(-d.writhe(), 0).at_a_one();
      CHECK(got == q_closed_form(p, q));
      CHECK(degree(got) == q_degree_closed_form(p, q));
    }
}

TEST_CASE("pinned tables") {
  CHECK(k00_table().total() == 26);
  CHECK(figure_eight_table().total() == 6);
  CHECK(split_figure_eight_table().max_cell() == 6);
  CHECK(k00_table().at(0, 1) == 3);
  CHECK(k00_table().at(0, -1) == 3);
  // a split link spans three diagonals
  CHECK(thinness_s(split_figure_eight_table()) == std::nullopt);
  CHECK(thinness_s(k00_table()) == 0);
  CHECK(thinness_s(figure_eight_table()) == 0);
}

TEST_CASE("khovanov closed form examples") {
  CHECK(khovanov_closed_form(0, 0).at(0, -1) == 3);
  CHECK(khovanov_closed_form(-1, 0).at(0, 1) == 3);
  CHECK(khovanov_closed_form(1, -1) == k00_table());
  CHECK(khovanov_closed_form(2, -1) == khovanov_closed_form(1, 0));
  for (int s = -6; s <= 6; ++s) CHECK(khovanov_closed_form(-s, 0) == mirror_dual(khovanov_closed_form(s, 0)));
}

TEST_CASE("khovanov closed form matches the cube") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{-1, 0}, {1, 0}, {-2, 0}, {2, -1}, {-1, -1}, {2, -2}}) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(homology_dims(kanenobu_diagram(p, q)) == khovanov_closed_form(p, q));
  }
}

TEST_CASE("khovanov closed form consistency") {
  for (int p = -6; p <= 6; ++p)
    for (int q = -6; q <= 6; ++q) {
      const BigradedDims h = khovanov_closed_form(p, q);
      CHECK(euler_check(h, jones_closed_form(p, q)));
      CHECK(thinness_s(h) == 0);
      CHECK(knight_move_check(h, 0));
    }
}

TEST_CASE("cell rule as first stated") {
  // agrees with the cube at s = 0 and at the (0,1) cell for s = -1
  CHECK(khovanov_closed_form_original(0, 0) == k00_table());
  CHECK(khovanov_closed_form_original(-1, 0).at(0, 1) == 3);
  // the (0,+-1) cells come out interchanged at s = -2
  const BigradedDims cube = homology_dims(kanenobu_diagram(-2, 0));
  CHECK(cube.at(0, 1) == 3);
  CHECK(cube.at(0, -1) == 2);
  CHECK(khovanov_closed_form_original(-2, 0).at(0, 1) == 2);
  CHECK(khovanov_closed_form_original(-2, 0).at(0, -1) == 3);
  for (int s = -4; s <= 4; ++s) {
    if (s == 0) continue;
    CAPTURE(s);
    CHECK_FALSE(khovanov_closed_form_original(s, 0) == khovanov_closed_form(s, 0));
    CHECK_FALSE(euler_check(khovanov_closed_form_original(s, 0), jones_closed_form(s, 0)));
  }
}

TEST_CASE("crossing number examples") {
  CHECK(crossing_number(1, -1) == exact(8));
  CHECK(crossing_number(-1, 1) == exact(8));
  CHECK(crossing_number(1, 0) == exact(8));
  CHECK(crossing_number(0, -1) == exact(8));
  CHECK(crossing_number(0, 0) == exact(8));
  CHECK(crossing_number(2, 3) == exact(13));
  CHECK(crossing_number(2, -1) == exact(10));
  CHECK(crossing_number(3, -1) == exact(11));
  CHECK(crossing_number(-4, 0) == exact(12));
  CHECK(crossing_number(3, -2) == bounds(12, 13, 13));
  CHECK(crossing_number(-2, 2) == bounds(11, 12, 12));
  CHECK_FALSE(crossing_number(3, -2).note.empty());
  CHECK_FALSE(crossing_number(2, 3).note.empty());
}

TEST_CASE("crossing number properties") {
  for (int p = -10; p <= 10; ++p)
    for (int q = -10; q <= 10; ++q) {
      const CrossingNumberResult r = crossing_number(p, q);
      CHECK(r == crossing_number(q, p));
      CHECK(r == crossing_number(-p, -q));
      const int m = std::abs(p) + std::abs(q);
      if (r.is_exact()) {
        CHECK(r.exact - m >= 6);
        CHECK(r.exact - m <= 8);
        CHECK(r.exact >= breadth_closed_form(p, q));
        CHECK_FALSE(r.conjectured);
      } else {
        CHECK(r.lo <= r.hi);
        REQUIRE(r.conjectured);
        CHECK(*r.conjectured >= r.lo);
        CHECK(*r.conjectured <= r.hi);
        CHECK(p * q < 0);
      }
    }
}

TEST_CASE("alternating exceptions") {
  const auto& s = alternating_exceptions();
  CHECK(s.size() == 7);
  CHECK(s.count({0, 0}) == 1);
  CHECK(s.count({1, -1}) == 1);
  CHECK(s.count({2, 0}) == 0);
  for (auto [p, q] : s) {
    CHECK(s.count({q, p}) == 1);
    CHECK(s.count({-p, -q}) == 1);
    // these are the cases whose crossing number equals the Jones breadth
    CHECK(crossing_number(p, q) == exact(breadth_closed_form(p, q)));
  }
}

TEST_CASE("kidwell audit") {
  for (int m : {1, 2}) {
    const KidwellReport r = kidwell_audit(m, -1);
    CHECK(r.deg_q == m + 6);
    CHECK(r.crossings == m + 9);
    CHECK(r.bridge <= 3);
    CHECK(r.inequality_holds);
  }
  const KidwellReport z = kidwell_audit(0, 0);
  CHECK(z.deg_q == 6);
  CHECK(z.bridge <= 2);
  CHECK(z.inequality_holds);
  const KidwellReport t = kidwell_audit(2, 2);
  CHECK(t.deg_q == 10);
  CHECK(t.crossings == 12);
  CHECK(t.bridge == 2);
  CHECK(t.deg_q + t.bridge == t.crossings);
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q) {
      const KidwellReport r = kidwell_audit(p, q);
      CHECK(r.crossings == std::abs(p) + std::abs(q) + 8);
      CHECK(r.inequality_holds);
    }
}
