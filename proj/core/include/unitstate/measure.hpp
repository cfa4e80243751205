#pragma once

#include "unitstate/complex.hpp"

#include <functional>

namespace unitstate {

// Affine chart identifying index*aff(S) ∩ Z^m with Z^d: an integer base
// point of index*aff(S) plus a lattice basis of the direction space.
struct Chart {
  Int index;
  IntVec base_point;
  std::vector<IntVec> dir_basis;

  // Chart coordinates of a point of index*aff(S).
  RatVec coords(const RatVec& v) const;
};

Chart build_chart(const Simplex& s);

// Relative volume of a rational simplex w.r.t. the lattice-normalized
// Lebesgue measure on its affine span; 1 for points. When the vertices lie
// on a rational hyperplane {a = 1} with a integral, the value is
// |det M| / d! with M expressing the vertices in a lattice basis of the
// linear span; otherwise it is computed through the chart of the span as
// lambda^d(psi[b S]) / b^{d+1}.
Rat nu_simplex(const Simplex& s);

// Chart route only, for cross-checking the two computation paths.
Rat nu_simplex_chart(const Simplex& s);

// Integral of an integer linear form over a simplex against the relative
// volume of its span: nu(S) times the vertex average of f.
Rat integrate_affine(const IntVec& f, const Simplex& s);

// Level measure of a region against the l-dimensional support of the
// complex: the sum of nu over the l-dimensional region simplexes contained
// in maximal l-cells. Region simplexes must be faces or subsets of cells.
Rat nu_level(const PolytopalComplex& c, int level, const std::vector<Simplex>& region);

struct QuadratureEstimate {
  double value = 0;
  double error_bound = 0;
  int refinement_level = 0;
};

// Numerical integral of g against nu on the simplex: recursive edgewise
// subdivision to the given depth with the vertex-average rule per cell
// (exact for affine g). Deterministic for dim <= 2; dim >= 3 falls back to
// a seeded Monte Carlo rule. error_bound is the difference between the two
// finest levels.
QuadratureEstimate quadrature_rational(const std::function<double(const RatVec&)>& g, const Simplex& s,
                                       int level, uint64_t seed = 0);

}  // namespace unitstate
