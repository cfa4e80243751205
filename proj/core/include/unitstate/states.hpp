#pragma once

#include "unitstate/enumerate.hpp"
#include "unitstate/measure.hpp"

#include <map>
#include <variant>

namespace unitstate {

// Per-simplex affine data on the input complex: cell id -> integer linear
// form on R^{n+1}; cells without an entry carry the zero form. Used for
// elements (Schauder-hat style) that are supplied directly as affine
// pieces rather than as closed terms.
using PerSimplexForms = std::map<size_t, IntVec>;

struct Element {
  std::variant<Term, PerSimplexForms> data;

  static Element from_term(Term t) { return Element{std::move(t)}; }
  static Element from_forms(PerSimplexForms f) { return Element{std::move(f)}; }
  bool is_term() const { return std::holds_alternative<Term>(data); }
};

struct PerSimplexContribution {
  size_t cell;    // id in the refined section complex
  size_t origin;  // input cell it descends from
  Rat nu;
  Rat average;    // vertex average of h over the section cell
};

struct StateReport {
  Rat value;
  Rat total_mass;  // nu of the carrying support
  int level = -1;  // -1 marks the top-dimensional state m_u
  std::vector<PerSimplexContribution> per_simplex;
};

// The state m_u(h) = (integral of h over W_1 against nu) / nu(W_1),
// evaluated exactly through the per-cell affine forms on the refined
// section complex.
StateReport state(const Element& h, const Term& u, const PolytopalComplex& w);

// Level state m_u^l(h) over the maximal l-cells of the section complex.
StateReport state_level(const Element& h, const Term& u, const PolytopalComplex& w, int level);

struct WeightedReport {
  Rat value;
  std::vector<int> levels;   // nonempty levels, increasing
  std::vector<Rat> weights;  // one per level, sum 1
  std::vector<StateReport> per_level;
};

// Weighted faithful state m_u^p = sum_i p_i m_u^{l_i}. Weights must be
// given exactly over the nonempty levels in increasing order and sum to 1.
WeightedReport state_weighted(const Element& h, const Term& u, const PolytopalComplex& w,
                              const std::vector<Rat>& weights);

// Comparison value for the level-0 stratum with u = 1: the
// denominator-weighted average of h over the isolated points.
Rat tau0_reference(const Element& h, const PolytopalComplex& w);

struct DensityPoint {
  RatVec point;
  Rat mu1;
  Rat mu2;
  Rat mu2_via_density;  // (u1/u2)(p) * mu1({p})
};

struct DensityReport {
  int dim = 0;
  Rat d1, d2;  // D_i = nu_{W_i}(W_i)
  Rat c;       // D_1 / D_2
  Rat lhs;     // exact m_2(f)
  QuadratureEstimate rhs;
  double discrepancy = 0;
  bool exact_match = true;          // d = 0: pointwise identity held
  std::vector<DensityPoint> points; // d = 0 breakdown
};

// The constant C = D_1/D_2 relating the two unit-induced measures.
DensityReport density_constant(const Term& u1, const Term& u2, const PolytopalComplex& w);

// Check the reciprocal-density identity. d = 0: exact pointwise check of
// d(mu_2) = (u1/u2) d(mu_1). d >= 1: the exact m_2(f) against the
// change-of-section integral (1/D_2) * int_{W_1} f / u2^{d+2} d(nu_{W_1}),
// evaluated by quadrature at the given refinement level.
DensityReport verify_density(const Element& f, const Term& u1, const Term& u2,
                             const PolytopalComplex& w, int level, uint64_t seed = 0);

struct DimensionReport {
  std::vector<Int> grid;
  std::vector<Int> xi;
  std::vector<double> ratios;  // log Xi(t) / log t per grid point
  std::vector<double> slopes;  // local log-log slopes between grid points
  int dim_estimate = 0;
  bool stabilized = false;  // Xi constant over the last grid points
};

// Growth-rate estimator for the spectral dimension: Xi(W,t) grows like
// t^{d+1}, so the final local slope rounds to d+1; a stabilized count
// means the state space is finite and the dimension is 0.
DimensionReport dimension_estimate(const PolytopalComplex& w, const Term& u,
                                   const std::vector<Int>& t_grid);

}  // namespace unitstate
