#pragma once

#include "unitstate/simplex.hpp"

#include <string>

namespace unitstate {

struct Diagnostic {
  std::string what;
  size_t cell_a = SIZE_MAX;
  size_t cell_b = SIZE_MAX;
};

// The l-dimensional support of a complex: the maximal l-cells and their
// supporting affine spans, the latter given as cell ids grouped by span
// equality.
struct LevelSupport {
  int level = 0;
  std::vector<size_t> cells;
  std::vector<std::vector<size_t>> span_classes;
};

struct LevelPartition {
  std::vector<LevelSupport> levels;  // increasing level, empty levels omitted

  const LevelSupport* find(int level) const {
    for (const auto& l : levels)
      if (l.level == level) return &l;
    return nullptr;
  }
};

// A finite simplicial complex, stored through its maximal cells (faces are
// implied). `origin` tracks, for each cell, the index of the input cell it
// descends from across refinements and sections.
class PolytopalComplex {
 public:
  PolytopalComplex() = default;
  PolytopalComplex(size_t ambient, std::vector<Simplex> cells);
  PolytopalComplex(size_t ambient, std::vector<Simplex> cells, std::vector<size_t> origin);

  size_t ambient() const { return ambient_; }
  const std::vector<Simplex>& cells() const { return cells_; }
  const Simplex& cell(size_t i) const { return cells_[i]; }
  size_t size() const { return cells_.size(); }
  const std::vector<size_t>& origin() const { return origin_; }

  int dim() const;  // max cell dimension

  bool contains(const RatVec& p) const;
  // Membership of v / v.back() for integer v, for complexes in {x_last=1}.
  bool contains_scaled(const IntVec& v) const;

  std::vector<size_t> max_faces(int level) const;
  LevelPartition local_dim_partition() const;

 private:
  size_t ambient_ = 0;
  std::vector<Simplex> cells_;
  std::vector<size_t> origin_;
};

// Empty iff the cells pairwise intersect in common faces and every listed
// cell is maximal; violations are reported pairwise.
std::vector<Diagnostic> validate_complex(const PolytopalComplex& c);

// Extra constraints for complexes representing a subset of [0,1]^n embedded
// at x_{n+1} = 1.
std::vector<Diagnostic> validate_cube_embedding(const PolytopalComplex& c);

// Vertex-wise image under an integer linear map with |det| = 1 (affine maps
// of the cube are unimodular linear maps in homogeneous coordinates).
PolytopalComplex transform_problem(const PolytopalComplex& c, const IntMat& t);

// Section W_1 = Cone(W) ∩ {u = 1}: each cell is mapped vertex-wise by
// v |-> v / u(v), where u is given per cell as an integer linear form that
// the caller has already made affine on each cell. Cell order and origin
// are preserved. Throws "not a unit" when some vertex value is <= 0.
PolytopalComplex cone_section(const PolytopalComplex& c, const std::vector<IntVec>& unit_forms);

}  // namespace unitstate
