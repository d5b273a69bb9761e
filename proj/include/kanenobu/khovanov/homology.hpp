#pragma once

#include "kanenobu/diagram/planar_diagram.hpp"
#include "kanenobu/khovanov/bigraded.hpp"
#include "kanenobu/khovanov/complex.hpp"
#include "kanenobu/parallelism.hpp"

namespace kanenobu {

struct HomologyOptions {
  int cap = 14;
  Parallelism mode = Parallelism::OpenMP;
};

// Rational Khovanov homology from ranks of the (degree, q) blocks of the
// differential. Raw cells are indexed (r, q) as built; normalized cells
// are (r - x(D), q + y(D) - 2x(D)).
BigradedDims raw_homology(const GradedComplex& c, Parallelism mode = Parallelism::OpenMP);
BigradedDims normalize(const BigradedDims& raw, const GradedComplex& c);

BigradedDims homology_dims(const PlanarDiagram& d, const HomologyOptions& opt = {});
BigradedDims raw_homology_dims(const PlanarDiagram& d, const HomologyOptions& opt = {});

}  // namespace kanenobu
