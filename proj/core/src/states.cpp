#include "unitstate/states.hpp"

#include <algorithm>
#include <cmath>

namespace unitstate {

namespace {

struct SectionPipeline {
  PolytopalComplex refined;        // refinement of W
  std::vector<IntVec> unit_forms;  // per refined cell
  std::vector<IntVec> h_forms;     // per refined cell; empty if no element
  PolytopalComplex section;        // W_1, cells aligned with refined
};

SectionPipeline build_pipeline(const Element* h, const Term& u, const PolytopalComplex& w,
                               bool check_nonneg = true) {
  size_t m = w.ambient();
  HomTerm hu = homogenize(u, m - 1);
  std::vector<IntVec> hyps = comparison_hyperplanes(hu);
  if (h && h->is_term()) {
    HomTerm hh = homogenize(std::get<Term>(h->data), m - 1);
    for (IntVec& f : comparison_hyperplanes(hh)) hyps.push_back(std::move(f));
  }

  SectionPipeline p;
  p.refined = refine_by_hyperplanes(w, hyps);

  p.unit_forms.reserve(p.refined.size());
  for (const Simplex& s : p.refined.cells()) p.unit_forms.push_back(resolve_form(hu, s));
  for (size_t i = 0; i < p.refined.size(); ++i)
    for (const RatVec& v : p.refined.cell(i).vertices()) {
      Rat x = dot(p.unit_forms[i], v);
      if (x <= 0)
        throw ValidationError("not a unit on W: value " + rat_str(x) + " at vertex (" + vec_str(v) + ")");
    }

  if (h) {
    p.h_forms.reserve(p.refined.size());
    if (h->is_term()) {
      HomTerm hh = homogenize(std::get<Term>(h->data), m - 1);
      for (const Simplex& s : p.refined.cells()) p.h_forms.push_back(resolve_form(hh, s));
    } else {
      const PerSimplexForms& table = std::get<PerSimplexForms>(h->data);
      for (const auto& [id, f] : table)
        if (f.size() != m)
          throw ValidationError("per-simplex element: form length != ambient dimension");
      for (size_t i = 0; i < p.refined.size(); ++i) {
        auto it = table.find(p.refined.origin()[i]);
        p.h_forms.push_back(it == table.end() ? IntVec(m, Int(0)) : it->second);
      }
    }
    if (check_nonneg) {
      for (size_t i = 0; i < p.refined.size(); ++i)
        for (const RatVec& v : p.refined.cell(i).vertices()) {
          Rat x = dot(p.h_forms[i], v);
          if (x < 0)
            throw ValidationError("element is negative on W: value " + rat_str(x) + " at vertex (" +
                                  vec_str(v) + ")");
        }
    }
  }

  p.section = cone_section(p.refined, p.unit_forms);
  return p;
}

StateReport integrate_over_level(const SectionPipeline& p, int level, int report_level) {
  std::vector<size_t> ids = p.section.max_faces(level);
  if (ids.empty())
    throw ValidationError("empty level " + std::to_string(level) + " in the section complex");
  StateReport rep;
  rep.level = report_level;
  rep.total_mass = 0;
  Rat integral = 0;
  for (size_t id : ids) {
    const Simplex& s = p.section.cell(id);
    Rat nu = nu_simplex(s);
    Rat avg = 0;
    for (const RatVec& v : s.vertices()) avg += dot(p.h_forms[id], v);
    avg /= Rat(static_cast<unsigned>(s.vertices().size()));
    rep.per_simplex.push_back({id, p.section.origin()[id], nu, avg});
    rep.total_mass += nu;
    integral += nu * avg;
  }
  rep.value = integral / rep.total_mass;
  return rep;
}

Rat eval_element_at(const Element& h, const PolytopalComplex& w, size_t cell_id, const RatVec& p) {
  if (h.is_term()) {
    HomTerm hh = homogenize(std::get<Term>(h.data), w.ambient() - 1);
    return eval(hh, p);
  }
  const PerSimplexForms& table = std::get<PerSimplexForms>(h.data);
  auto it = table.find(w.origin()[cell_id]);
  if (it == table.end()) return 0;
  return dot(it->second, p);
}

}  // namespace

StateReport state(const Element& h, const Term& u, const PolytopalComplex& w) {
  SectionPipeline p = build_pipeline(&h, u, w);
  return integrate_over_level(p, p.section.dim(), -1);
}

StateReport state_level(const Element& h, const Term& u, const PolytopalComplex& w, int level) {
  SectionPipeline p = build_pipeline(&h, u, w);
  return integrate_over_level(p, level, level);
}

WeightedReport state_weighted(const Element& h, const Term& u, const PolytopalComplex& w,
                              const std::vector<Rat>& weights) {
  SectionPipeline p = build_pipeline(&h, u, w);
  LevelPartition part = p.section.local_dim_partition();
  if (weights.size() != part.levels.size())
    throw ValidationError("weight count mismatch: " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(part.levels.size()) + " nonempty levels");
  Rat total = 0;
  for (const Rat& x : weights) {
    if (x < 0) throw ValidationError("weights must be nonnegative");
    total += x;
  }
  if (total != 1) throw ValidationError("weights must sum to 1 exactly (got " + rat_str(total) + ")");

  WeightedReport rep;
  rep.value = 0;
  rep.weights = weights;
  for (size_t i = 0; i < part.levels.size(); ++i) {
    int l = part.levels[i].level;
    rep.levels.push_back(l);
    rep.per_level.push_back(integrate_over_level(p, l, l));
    rep.value += weights[i] * rep.per_level.back().value;
  }
  return rep;
}

Rat tau0_reference(const Element& h, const PolytopalComplex& w) {
  std::vector<size_t> ids = w.max_faces(0);
  if (ids.empty()) throw ValidationError("tau0_reference: no isolated points (empty level 0)");
  Rat weight_sum = 0;
  Rat acc = 0;
  for (size_t id : ids) {
    const RatVec& p = w.cell(id).vertices()[0];
    Rat inv_den = Rat(1) / Rat(denominator(p));
    weight_sum += inv_den;
    acc += inv_den * eval_element_at(h, w, id, p);
  }
  return acc / weight_sum;
}

DensityReport density_constant(const Term& u1, const Term& u2, const PolytopalComplex& w) {
  SectionPipeline p1 = build_pipeline(nullptr, u1, w);
  SectionPipeline p2 = build_pipeline(nullptr, u2, w);
  DensityReport rep;
  rep.dim = w.dim();
  rep.d1 = 0;
  rep.d2 = 0;
  for (size_t id : p1.section.max_faces(p1.section.dim())) rep.d1 += nu_simplex(p1.section.cell(id));
  for (size_t id : p2.section.max_faces(p2.section.dim())) rep.d2 += nu_simplex(p2.section.cell(id));
  rep.c = rep.d1 / rep.d2;
  return rep;
}

DensityReport verify_density(const Element& f, const Term& u1, const Term& u2,
                             const PolytopalComplex& w, int level, uint64_t seed) {
  DensityReport rep = density_constant(u1, u2, w);
  size_t m = w.ambient();
  int d = rep.dim;
  HomTerm hu1 = homogenize(u1, m - 1);
  HomTerm hu2 = homogenize(u2, m - 1);

  if (d == 0) {
    // Finite spectrum: mu_i = (1/r) sum_j (1/u_i(p_j)) delta_{p_j}; the
    // density identity d mu_2 = (u1/u2) d mu_1 is checked point by point.
    std::vector<size_t> ids = w.max_faces(0);
    Rat r(static_cast<unsigned long>(ids.size()));
    Rat lhs = 0;
    Rat rhs = 0;
    for (size_t id : ids) {
      const RatVec& p = w.cell(id).vertices()[0];
      DensityPoint dp;
      dp.point = p;
      Rat v1 = eval(hu1, p);
      Rat v2 = eval(hu2, p);
      if (v1 <= 0 || v2 <= 0) throw ValidationError("verify_density: unit vanishing at an isolated point");
      dp.mu1 = Rat(1) / (r * v1);
      dp.mu2 = Rat(1) / (r * v2);
      dp.mu2_via_density = (v1 / v2) * dp.mu1;
      if (dp.mu2 != dp.mu2_via_density) rep.exact_match = false;
      Rat fv = eval_element_at(f, w, id, p);
      lhs += fv * dp.mu2;
      rhs += fv * dp.mu2_via_density;
      rep.points.push_back(std::move(dp));
    }
    rep.lhs = lhs;
    rep.rhs.value = to_double(rhs);
    rep.rhs.error_bound = 0;
    rep.rhs.refinement_level = 0;
    rep.discrepancy = std::abs(to_double(rep.lhs) - rep.rhs.value);
    return rep;
  }

  rep.lhs = state(f, u2, w).value;

  // Change of section: m_2(f) = (1/D_2) int_{W_1} f / u2^{d+2} d nu_{W_1},
  // since (u1/u2) composed with the projection onto W_1 is 1/u2 there.
  SectionPipeline p1 = build_pipeline(&f, u1, w);
  double total = 0;
  double err = 0;
  for (size_t id : p1.section.max_faces(p1.section.dim())) {
    const Simplex& s = p1.section.cell(id);
    const IntVec& hform = p1.h_forms[id];
    auto g = [&](const RatVec& x) {
      Rat fx = dot(hform, x);
      Rat u2x = eval(hu2, x);
      double ratio = to_double(fx) / std::pow(to_double(u2x), d + 2);
      return ratio;
    };
    QuadratureEstimate q = quadrature_rational(g, s, level, seed);
    total += q.value;
    err += q.error_bound;
  }
  rep.rhs.value = total / to_double(rep.d2);
  rep.rhs.error_bound = err / to_double(rep.d2);
  rep.rhs.refinement_level = level;
  rep.discrepancy = std::abs(to_double(rep.lhs) - rep.rhs.value);
  return rep;
}

DimensionReport dimension_estimate(const PolytopalComplex& w, const Term& u,
                                   const std::vector<Int>& t_grid) {
  if (t_grid.empty()) throw ValidationError("dimension_estimate: empty grid");
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (t_grid[i] <= t_grid[i - 1]) throw ValidationError("dimension_estimate: grid must increase");

  EnumerationRun run = enumerate_primitive(w, u, t_grid.back());

  DimensionReport rep;
  rep.grid = t_grid;
  for (const Int& t : t_grid) {
    size_t count = 0;
    while (count < run.states.size() && run.states[count].unit_value <= t) ++count;
    rep.xi.push_back(Int(count));
  }

  for (size_t i = 0; i < t_grid.size(); ++i) {
    double lx = rep.xi[i] > 0 ? std::log(rep.xi[i].convert_to<double>()) : std::nan("");
    double lt = std::log(t_grid[i].convert_to<double>());
    rep.ratios.push_back(lx / lt);
    if (i == 0) {
      rep.slopes.push_back(rep.ratios[0]);
    } else {
      double prev = rep.xi[i - 1] > 0 ? std::log(rep.xi[i - 1].convert_to<double>()) : std::nan("");
      double dt = lt - std::log(t_grid[i - 1].convert_to<double>());
      rep.slopes.push_back((lx - prev) / dt);
    }
  }

  size_t n = rep.xi.size();
  rep.stabilized = n >= 3 && rep.xi[n - 1] == rep.xi[n - 2] && rep.xi[n - 2] == rep.xi[n - 3];
  if (rep.stabilized || rep.xi.back() == 0) {
    rep.dim_estimate = 0;
  } else {
    rep.dim_estimate = static_cast<int>(std::lround(rep.slopes.back())) - 1;
    if (rep.dim_estimate < 0) rep.dim_estimate = 0;
  }
  return rep;
}

}  // namespace unitstate
