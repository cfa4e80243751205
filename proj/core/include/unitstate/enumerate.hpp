#pragma once

#include "unitstate/term.hpp"

namespace unitstate {

// One discrete extremal state: a primitive point of Cone(W) together with
// its unit value b = u(primitive), the section point primitive/b on W_1,
// and its denominator (equal to b).
struct DiscreteState {
  IntVec primitive;
  Int unit_value;
  RatVec section_point;
  Int denominator;
};

struct EnumerationRun {
  Term unit;
  size_t ambient = 0;  // n+1
  Int bound = 0;       // t
  Int block_size = 0;  // c = lcm of the top-dimension indices of the section cells
  // Sorted by (unit_value, lexicographic primitive); complete up to bound.
  std::vector<DiscreteState> states;
  // n_k: number of states with unit_value <= c*k, for each complete block
  // k = 1..floor(bound / c).
  std::vector<size_t> block_boundaries;
};

// All primitive integer points v with v/v_last in W and u(v) <= t, by an
// exact scan of the slices v_last = 1..floor(t/m), where m is the minimum
// of u over the vertices of the refined complex. Parallel over slices
// (UNITSTATE_THREADS caps the worker count); the merged result is
// deterministic.
EnumerationRun enumerate_primitive(const PolytopalComplex& w, const Term& u, const Int& t);

Int xi_count(const PolytopalComplex& w, const Term& u, const Int& t);

// Partial Cesàro averages (1/k) sum_{t<=k} h(v_t)/u(v_t) for k = 1..#states.
std::vector<Rat> cesaro_partials(const EnumerationRun& run, const Term& h);

// Per-block sums of h(v)/u(v) over each complete block, and the partial
// averages aligned at the block boundaries n_k.
std::vector<Rat> block_sums(const EnumerationRun& run, const Term& h);
std::vector<Rat> block_partials(const EnumerationRun& run, const Term& h);

// Number of integer points in the dilate tS, by bounding-box scan with the
// exact membership predicate.
Int ehrhart_count(const Simplex& s, const Int& t);

// Number of primitive integer points in tS, directly.
Int primitive_count_direct(const Simplex& s, const Int& t);

// Möbius inversion of the Ehrhart counts: sum_{h | t} mu(t/h) L(h). Equals
// the direct primitive count when S lies on an integral hyperplane {a = 1}.
Int primitive_by_inversion(const Simplex& s, const Int& t);

}  // namespace unitstate
