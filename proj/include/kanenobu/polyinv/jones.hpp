#pragma once

#include <cstdint>
#include <vector>

#include "kanenobu/algebra/laurent.hpp"
#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/parallelism.hpp"

namespace kanenobu {

struct JonesOptions {
  int cap = 20;
  Parallelism mode = Parallelism::OpenMP;
};

// counts[a][k]: states with a zero-smoothings and k circles (free circles
// included).
using StateHistogram = std::vector<std::vector<std::uint64_t>>;

StateHistogram state_histogram(const PlanarDiagram& d, Parallelism mode);

// Kauffman bracket in A, normalized so that a single circle is 1.
LaurentPoly1 kauffman_bracket(const PlanarDiagram& d, const JonesOptions& opt = {});

// Jones polynomial in t (half-unit exponents for links with an even number
// of components). Throws CapExceeded above opt.cap.
LaurentPoly1 jones(const PlanarDiagram& d, const JonesOptions& opt = {});

// Substitutes t = A^-4 in the writhe-normalized bracket.
LaurentPoly1 jones_from_bracket(const LaurentPoly1& bracket, int writhe);

}  // namespace kanenobu
