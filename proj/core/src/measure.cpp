#include "unitstate/measure.hpp"

#include <cmath>
#include <random>

namespace unitstate {

RatVec Chart::coords(const RatVec& v) const {
  size_t m = base_point.size();
  RatVec rhs(m);
  for (size_t i = 0; i < m; ++i) rhs[i] = v[i] - Rat(base_point[i]);
  RatMat d = RatMat::from_columns(
      [&] {
        std::vector<std::vector<Rat>> cols;
        for (const IntVec& b : dir_basis) cols.push_back(to_rat_vec(b));
        return cols;
      }());
  auto sol = solve_unique(d, rhs);
  if (!sol) throw ValidationError("Chart::coords: point not on the span");
  return *sol;
}

Chart build_chart(const Simplex& s) {
  Chart chart;
  SpanIndex si = span_index(s.aff());
  chart.index = si.index;
  chart.base_point = si.point;
  std::vector<RatVec> dirs = s.aff().dirs;
  chart.dir_basis = lattice_basis(dirs);
  if (static_cast<int>(chart.dir_basis.size()) != s.dim())
    throw std::logic_error("build_chart: direction lattice rank mismatch");
  return chart;
}

namespace {

// d-volume in chart coordinates: |det(y_2-y_1, ..., y_{d+1}-y_1)| / d!.
Rat simplex_volume(const std::vector<RatVec>& y) {
  size_t d = y.size() - 1;
  if (d == 0) return 1;
  RatMat m(d, d);
  for (size_t j = 1; j <= d; ++j)
    for (size_t i = 0; i < d; ++i) m(i, j - 1) = y[j][i] - y[0][i];
  Rat v = det(m);
  if (v < 0) v = -v;
  Int fact = 1;
  for (size_t i = 2; i <= d; ++i) fact *= Int(i);
  return v / Rat(fact);
}

}  // namespace

Rat nu_simplex_chart(const Simplex& s) {
  int d = s.dim();
  if (d == 0) return 1;
  Chart chart = build_chart(s);
  std::vector<RatVec> y;
  for (const RatVec& w : s.vertices()) y.push_back(chart.coords(vec_scale(Rat(chart.index), w)));
  Rat vol = simplex_volume(y);
  Rat scale = 1;
  for (int i = 0; i <= d; ++i) scale *= Rat(chart.index);
  return vol / scale;
}

Rat nu_simplex(const Simplex& s) {
  int d = s.dim();
  if (d == 0) return 1;
  auto a = unit_functional(s.vertices());
  if (!a) return nu_simplex_chart(s);

  // Vertices on {a = 1}: linear span has rank d+1 and the simplex volume is
  // |det M| / d! with M the vertex coordinates in a basis of Z^m ∩ span.
  std::vector<IntVec> basis = lattice_basis(s.vertices());
  if (basis.size() != static_cast<size_t>(d) + 1)
    throw std::logic_error("nu_simplex: lattice rank mismatch");
  RatMat b = RatMat::from_columns([&] {
    std::vector<std::vector<Rat>> cols;
    for (const IntVec& v : basis) cols.push_back(to_rat_vec(v));
    return cols;
  }());
  RatMat m(static_cast<size_t>(d) + 1, static_cast<size_t>(d) + 1);
  for (size_t j = 0; j <= static_cast<size_t>(d); ++j) {
    auto col = solve_unique(b, s.vertices()[j]);
    if (!col) throw std::logic_error("nu_simplex: vertex not in lattice span");
    for (size_t i = 0; i <= static_cast<size_t>(d); ++i) m(i, j) = (*col)[i];
  }
  Rat v = det(m);
  if (v < 0) v = -v;
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= Int(i);
  return v / Rat(fact);
}

Rat integrate_affine(const IntVec& f, const Simplex& s) {
  if (f.size() != s.ambient()) throw ValidationError("integrate_affine: form dimension mismatch");
  Rat sum = 0;
  for (const RatVec& w : s.vertices()) sum += dot(f, w);
  return nu_simplex(s) * sum / Rat(static_cast<unsigned>(s.vertices().size()));
}

Rat nu_level(const PolytopalComplex& c, int level, const std::vector<Simplex>& region) {
  std::vector<size_t> max_cells = c.max_faces(level);
  Rat total = 0;
  for (const Simplex& r : region) {
    if (r.dim() != level) continue;
    for (size_t id : max_cells) {
      const Simplex& s = c.cell(id);
      bool inside = true;
      for (const RatVec& v : r.vertices())
        if (!s.contains(v)) {
          inside = false;
          break;
        }
      if (inside) {
        total += nu_simplex(r);
        break;
      }
    }
  }
  return total;
}

namespace {

using Cell = std::vector<RatVec>;

RatVec midpoint(const RatVec& a, const RatVec& b) { return vec_scale(Rat(1, 2), vec_add(a, b)); }

std::vector<Cell> subdivide(const Cell& cell) {
  size_t k = cell.size();
  if (k == 2) {
    RatVec m = midpoint(cell[0], cell[1]);
    return {{cell[0], m}, {m, cell[1]}};
  }
  if (k == 3) {
    RatVec ab = midpoint(cell[0], cell[1]);
    RatVec ac = midpoint(cell[0], cell[2]);
    RatVec bc = midpoint(cell[1], cell[2]);
    return {{cell[0], ab, ac}, {ab, cell[1], bc}, {ac, bc, cell[2]}, {ab, bc, ac}};
  }
  throw std::logic_error("subdivide: only implemented for dim <= 2");
}

double estimate_level(const std::function<double(const RatVec&)>& g, const Simplex& s, int level,
                      double nu_total) {
  std::vector<Cell> cells = {s.vertices()};
  for (int l = 0; l < level; ++l) {
    std::vector<Cell> next;
    next.reserve(cells.size() * 4);
    for (const Cell& c : cells)
      for (Cell& piece : subdivide(c)) next.push_back(std::move(piece));
    cells = std::move(next);
  }
  // Edgewise pieces all carry equal nu mass.
  double per_cell = nu_total / static_cast<double>(cells.size());
  double acc = 0;
  for (const Cell& c : cells) {
    double avg = 0;
    for (const RatVec& v : c) avg += g(v);
    acc += per_cell * avg / static_cast<double>(c.size());
  }
  return acc;
}

double estimate_monte_carlo(const std::function<double(const RatVec&)>& g, const Simplex& s, int level,
                            double nu_total, uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(level)));
  size_t samples = size_t{64} << std::min(level, 20);
  std::uniform_int_distribution<int> coord(0, 1 << 16);
  const auto& verts = s.vertices();
  double acc = 0;
  for (size_t i = 0; i < samples; ++i) {
    // Random rational barycentric weights.
    std::vector<Int> w(verts.size());
    Int total = 0;
    for (Int& x : w) {
      x = coord(rng) + 1;
      total += x;
    }
    RatVec p(s.ambient(), Rat(0));
    for (size_t j = 0; j < verts.size(); ++j) p = vec_add(p, vec_scale(Rat(w[j], total), verts[j]));
    acc += g(p);
  }
  return nu_total * acc / static_cast<double>(samples);
}

}  // namespace

QuadratureEstimate quadrature_rational(const std::function<double(const RatVec&)>& g, const Simplex& s,
                                       int level, uint64_t seed) {
  if (level < 0) throw ValidationError("quadrature_rational: negative level");
  double nu_total = to_double(nu_simplex(s));
  QuadratureEstimate est;
  est.refinement_level = level;
  if (s.dim() == 0) {
    est.value = nu_total * g(s.vertices()[0]);
    est.error_bound = 0;
    return est;
  }
  auto run = [&](int l) {
    if (s.dim() <= 2) return estimate_level(g, s, l, nu_total);
    return estimate_monte_carlo(g, s, l, nu_total, seed);
  };
  est.value = run(level);
  est.error_bound = level == 0 ? 0 : std::abs(est.value - run(level - 1));
  return est;
}

}  // namespace unitstate
