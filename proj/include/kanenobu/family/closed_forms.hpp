#pragma once

#include "kanenobu/algebra/laurent.hpp"

namespace kanenobu {

// V(p,q) = (-t)^(p+q) (V(0,0) - 1) + 1 with V(0,0) = V(4_1)^2.
LaurentPoly1 jones_closed_form(int p, int q);

// |p+q| + 4 when |p+q| > 4, else 8.
int breadth_closed_form(int p, int q);

// S_{-1} = 0, S_0 = 1, S_k = x S_{k-1} - S_{k-2}.
LaurentPoly1 chebyshev_s(int k);
// sign(n) S_{|n|-1}; sigma(0) = 0.
LaurentPoly1 sigma(int n);

LaurentPoly1 q_8_8();
LaurentPoly1 q_8_9();

// -s_p s_q (Q(8_9) - 1) + x^-1 (s_{p+1} s_{q+1} + s_{p-1} s_{q-1}) (Q(8_8) - 1) + 1
LaurentPoly1 q_closed_form(int p, int q);

// |p|+|q|+6 when pq >= 0, else |p|+|q|+5.
int q_degree_closed_form(int p, int q);

}  // namespace kanenobu
