#pragma once

#include "unitstate/lattice.hpp"

namespace unitstate {

// Rational affine functional x |-> <coef, x> + constant.
struct AffForm {
  RatVec coef;
  Rat constant;

  Rat eval(const RatVec& x) const { return dot(coef, x) + constant; }
};

// Integer-cleared affine functional (positive scaling of an AffForm, so
// signs and zero sets are preserved).
struct IntAffForm {
  IntVec coef;
  Int constant;

  Rat eval(const RatVec& x) const { return dot(coef, x) + Rat(constant); }

  // Value scaled by q = v.back() at the point v / q, valid for complexes
  // embedded in {x_last = 1}. Sign tests are exact for q > 0.
  Int eval_scaled(const IntVec& v) const { return dot(coef, v) + constant * v.back(); }
};

IntAffForm clear_form(const AffForm& f);

// Exact membership predicate for one simplex, compiled once: barycentric
// coordinates as affine functionals plus the affine-hull residuals.
struct SimplexPredicate {
  std::vector<AffForm> bary;          // >= 0 on the simplex, sum to 1 on aff
  std::vector<IntAffForm> bary_int;
  std::vector<AffForm> residual;      // == 0 exactly on the affine hull
  std::vector<IntAffForm> residual_int;

  bool contains(const RatVec& p) const;
  bool on_aff(const RatVec& p) const;
  // Membership of v / v.back() for integer v with v.back() > 0, assuming
  // the simplex lies in {x_last = 1}.
  bool contains_scaled(const IntVec& v) const;
};

class Simplex {
 public:
  // Vertices must be affinely independent; they are stored sorted
  // lexicographically so equal simplexes compare equal.
  explicit Simplex(std::vector<RatVec> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  size_t ambient() const { return verts_.empty() ? 0 : verts_[0].size(); }
  const std::vector<RatVec>& vertices() const { return verts_; }
  const SimplexPredicate& predicate() const { return pred_; }

  AffineSpan aff() const;
  RatVec barycenter() const;

  // Exact barycentric coordinates of p, or nullopt when p is off the
  // affine hull.
  std::optional<RatVec> barycentric(const RatVec& p) const;
  bool contains(const RatVec& p) const { return pred_.contains(p); }

  // True iff every vertex of other is a vertex of this simplex (other is
  // then a face).
  bool has_face(const Simplex& other) const;

  bool operator==(const Simplex& o) const { return verts_ == o.verts_; }

 private:
  std::vector<RatVec> verts_;
  SimplexPredicate pred_;
};

bool aff_equal(const Simplex& a, const Simplex& b);

// Vertices of the convex polytope S ∩ T, exactly. Used by complex
// validation: the intersection is a common face iff each such vertex is a
// vertex of both simplexes.
std::vector<RatVec> intersection_vertices(const Simplex& s, const Simplex& t);

}  // namespace unitstate
