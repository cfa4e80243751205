#pragma once

#include "unitstate/matrix.hpp"

namespace unitstate {

// Column-style Hermite normal form: H = A * U with U unimodular.
// Pivots are positive, entries to the left of a pivot in its row are
// reduced into [0, pivot), zero columns are trailing. With that
// normalization H is the canonical representative of the column lattice.
struct HnfResult {
  IntMat h;
  IntMat u;
  size_t rank = 0;
};
HnfResult hnf(const IntMat& a);

// Basis of { x in Z^n : A x = 0 }. The result generates the full integer
// kernel (it is saturated), not just a finite-index sublattice.
std::vector<IntVec> integer_kernel(const IntMat& a);

// Basis of the free module Z^m  ∩  span_Q(V), for rational spanning
// vectors V. Empty span yields an empty basis.
std::vector<IntVec> lattice_basis(const std::vector<RatVec>& spanning);

// Lattice equality of the column lattices generated by two generating
// sets, decided via canonical HNF. Bases are unique only up to unimodular
// change, so tests must compare through this, never entrywise.
bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

// A rational affine subspace, given as base point + direction vectors.
struct AffineSpan {
  RatVec base;
  std::vector<RatVec> dirs;
};

// Index of a rational affine span A: the least b >= 1 with
// b*A ∩ Z^m nonempty, together with a witness integer point of b*A.
// Computed by clearing the span's rational equations and solving the
// resulting system in integers through the HNF.
struct SpanIndex {
  Int index;
  IntVec point;  // integer point of index*A
};
SpanIndex span_index(const AffineSpan& a);

// Integer solution of  <a, w_i> = 1  for all given rational points, when
// one exists (the points then lie on the rational hyperplane {a = 1}).
std::optional<IntVec> unit_functional(const std::vector<RatVec>& points);

}  // namespace unitstate
