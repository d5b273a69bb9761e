#pragma once

#include <optional>

#include "kanenobu/algebra/laurent.hpp"
#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/khovanov/bigraded.hpp"
#include "kanenobu/khovanov/homology.hpp"

namespace kanenobu {

// Sum of (-1)^i q^j dim H^{i,j}.
LaurentPoly1 graded_euler(const BigradedDims& dims);

// graded_euler(dims) == (q + q^-1) V with t^(1/2) -> -q.
bool euler_check(const BigradedDims& dims, const LaurentPoly1& jones);

// s when the support lies on exactly the diagonals j - 2i = s - 1, s + 1.
std::optional<int> thinness_s(const BigradedDims& dims);

// Knight-move pairing on a thin table: dim H^{i,2i+s-1} = dim H^{i+1,2i+s+3}
// for i outside {-1, 0}, and the two cells (0, s -+ 1) exceed their
// partners by one. Also requires every cell to lie on those diagonals.
bool knight_move_check(const BigradedDims& dims, int s);

// Raw cells of D against D(*0) and D(*1) at crossing c:
// dim H^{i,j}(D) <= dim H^{i,j}(D(*0)) + dim H^{i-1,j-1}(D(*1)).
bool les_subadditivity_check(const PlanarDiagram& d, int c, const HomologyOptions& opt = {});

// Rational Kunneth formula for a disjoint union.
BigradedDims kunneth(const BigradedDims& a, const BigradedDims& b);

// (i, j) -> (-i, -j)
BigradedDims mirror_dual(const BigradedDims& dims);

}  // namespace kanenobu
