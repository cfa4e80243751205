#include "unitstate/complex.hpp"

#include <algorithm>
#include <numeric>

namespace unitstate {

PolytopalComplex::PolytopalComplex(size_t ambient, std::vector<Simplex> cells)
    : PolytopalComplex(ambient, std::move(cells), {}) {}

PolytopalComplex::PolytopalComplex(size_t ambient, std::vector<Simplex> cells, std::vector<size_t> origin)
    : ambient_(ambient), cells_(std::move(cells)), origin_(std::move(origin)) {
  if (origin_.empty()) {
    origin_.resize(cells_.size());
    std::iota(origin_.begin(), origin_.end(), size_t{0});
  }
  if (origin_.size() != cells_.size())
    throw ValidationError("PolytopalComplex: origin size mismatch");
  for (const Simplex& s : cells_)
    if (s.ambient() != ambient_)
      throw ValidationError("PolytopalComplex: cell ambient dimension mismatch");
}

int PolytopalComplex::dim() const {
  int d = -1;
  for (const Simplex& s : cells_) d = std::max(d, s.dim());
  return d;
}

bool PolytopalComplex::contains(const RatVec& p) const {
  if (p.size() != ambient_) throw ValidationError("contains: point dimension mismatch");
  for (const Simplex& s : cells_)
    if (s.contains(p)) return true;
  return false;
}

bool PolytopalComplex::contains_scaled(const IntVec& v) const {
  for (const Simplex& s : cells_)
    if (s.predicate().contains_scaled(v)) return true;
  return false;
}

std::vector<size_t> PolytopalComplex::max_faces(int level) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim() == level) out.push_back(i);
  return out;
}

LevelPartition PolytopalComplex::local_dim_partition() const {
  LevelPartition part;
  for (int l = 0; l <= dim(); ++l) {
    std::vector<size_t> ids = max_faces(l);
    if (ids.empty()) continue;
    LevelSupport sup;
    sup.level = l;
    sup.cells = ids;
    // Group by equal affine span; distinct spans are the A_1..A_r of the
    // level's support.
    for (size_t id : ids) {
      bool placed = false;
      for (auto& cls : sup.span_classes) {
        if (aff_equal(cells_[cls.front()], cells_[id])) {
          cls.push_back(id);
          placed = true;
          break;
        }
      }
      if (!placed) sup.span_classes.push_back({id});
    }
    part.levels.push_back(std::move(sup));
  }
  return part;
}

std::vector<Diagnostic> validate_complex(const PolytopalComplex& c) {
  std::vector<Diagnostic> out;
  for (size_t i = 0; i < c.size(); ++i) {
    for (size_t j = i + 1; j < c.size(); ++j) {
      const Simplex& s = c.cell(i);
      const Simplex& t = c.cell(j);
      if (s.has_face(t) || t.has_face(s)) {
        out.push_back({"cell is a face of another listed cell (cells must be maximal)", i, j});
        continue;
      }
      std::vector<RatVec> verts = intersection_vertices(s, t);
      bool ok = true;
      for (const RatVec& v : verts) {
        bool shared = std::find(s.vertices().begin(), s.vertices().end(), v) != s.vertices().end() &&
                      std::find(t.vertices().begin(), t.vertices().end(), v) != t.vertices().end();
        if (!shared) {
          ok = false;
          break;
        }
      }
      if (!ok)
        out.push_back({"cells do not intersect in a common face", i, j});
    }
  }
  return out;
}

std::vector<Diagnostic> validate_cube_embedding(const PolytopalComplex& c) {
  std::vector<Diagnostic> out;
  for (size_t i = 0; i < c.size(); ++i) {
    for (const RatVec& v : c.cell(i).vertices()) {
      if (v.back() != 1) {
        out.push_back({"vertex " + vec_str(v) + " has last coordinate != 1", i, SIZE_MAX});
        continue;
      }
      for (size_t k = 0; k + 1 < v.size(); ++k) {
        if (v[k] < 0 || v[k] > 1) {
          out.push_back({"vertex " + vec_str(v) + " lies outside the unit cube", i, SIZE_MAX});
          break;
        }
      }
    }
  }
  return out;
}

PolytopalComplex transform_problem(const PolytopalComplex& c, const IntMat& t) {
  if (t.rows != c.ambient() || t.cols != c.ambient())
    throw ValidationError("transform_problem: matrix shape mismatch");
  Int d = det(t);
  if (d != 1 && d != -1)
    throw ValidationError("transform_problem: linear part is not unimodular (|det| = " + Int(d < 0 ? -d : d).str() + ")");
  std::vector<Simplex> cells;
  cells.reserve(c.size());
  for (const Simplex& s : c.cells()) {
    std::vector<RatVec> verts;
    for (const RatVec& v : s.vertices()) {
      RatVec img(c.ambient(), Rat(0));
      for (size_t i = 0; i < c.ambient(); ++i)
        for (size_t j = 0; j < c.ambient(); ++j) img[i] += Rat(t(i, j)) * v[j];
      verts.push_back(std::move(img));
    }
    cells.emplace_back(std::move(verts));
  }
  return PolytopalComplex(c.ambient(), std::move(cells), c.origin());
}

PolytopalComplex cone_section(const PolytopalComplex& c, const std::vector<IntVec>& unit_forms) {
  if (unit_forms.size() != c.size())
    throw ValidationError("cone_section: one unit form per cell required");
  std::vector<Simplex> cells;
  cells.reserve(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    std::vector<RatVec> verts;
    for (const RatVec& v : c.cell(i).vertices()) {
      Rat uv = dot(unit_forms[i], v);
      if (uv <= 0)
        throw ValidationError("not a unit on W: value " + rat_str(uv) + " at vertex (" + vec_str(v) + ")");
      verts.push_back(vec_scale(Rat(1) / uv, v));
    }
    cells.emplace_back(std::move(verts));
  }
  return PolytopalComplex(c.ambient(), std::move(cells), c.origin());
}

}  // namespace unitstate
