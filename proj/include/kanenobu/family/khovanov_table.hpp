#pragma once

#include "kanenobu/khovanov/bigraded.hpp"

namespace kanenobu {

// Rational Khovanov homology of 4_1, of K(0,0), and of 4_1 with a split
// copy of itself.
BigradedDims figure_eight_table();
BigradedDims k00_table();
BigradedDims split_figure_eight_table();

// Khovanov homology of K(p,q), depending on s = p + q only:
//   H^{i,j} = T0[i-s, j-2s] + [(i,j) = (0,+-1)] - [(i,j) = (s,2s+-1)]
// where T0 is the K(0,0) table. For s < 0 this is the cell rule obtained
// by induction over the twist crossings, and s > 0 is its mirror.
BigradedDims khovanov_closed_form(int p, int q);

// Cell rule for s < 0 as originally stated: generic cells T0[i+s, j+2s],
// (0,1) -> T0[-s,-2s-1]+1, (0,-1) -> T0[-s,-2s+1]+1, for s != -1 the cells
// (-1,-3), (-1,-1) -> T0[-s-1,-2s-3], T0[-s-1,-2s-1], and (s,2s+-1) ->
// T0[0,+-1]-1; s > 0 reflected. Disagrees with the cube for s != 0 and is
// kept to document that.
BigradedDims khovanov_closed_form_original(int p, int q);

}  // namespace kanenobu
