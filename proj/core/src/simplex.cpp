#include "unitstate/simplex.hpp"

#include <algorithm>
#include <functional>

namespace unitstate {

IntAffForm clear_form(const AffForm& f) {
  RatVec all = f.coef;
  all.push_back(f.constant);
  IntVec cleared = clear_denominators(all);
  IntAffForm out;
  out.constant = cleared.back();
  cleared.pop_back();
  out.coef = std::move(cleared);
  return out;
}

bool SimplexPredicate::contains(const RatVec& p) const {
  for (const auto& r : residual_int)
    if (r.eval(p) != 0) return false;
  for (const auto& b : bary_int)
    if (b.eval(p) < 0) return false;
  return true;
}

bool SimplexPredicate::on_aff(const RatVec& p) const {
  for (const auto& r : residual_int)
    if (r.eval(p) != 0) return false;
  return true;
}

bool SimplexPredicate::contains_scaled(const IntVec& v) const {
  for (const auto& r : residual_int)
    if (r.eval_scaled(v) != 0) return false;
  for (const auto& b : bary_int)
    if (b.eval_scaled(v) < 0) return false;
  return true;
}

namespace {

SimplexPredicate build_predicate(const std::vector<RatVec>& verts) {
  size_t k = verts.size();
  size_t m = verts[0].size();

  // Columns [w_j; 1]; affine independence means rank k.
  RatMat hat(m + 1, k);
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 0; i < m; ++i) hat(i, j) = verts[j][i];
    hat(m, j) = 1;
  }

  // Pick k independent rows by eliminating the transpose.
  RatMat t(k, m + 1);
  for (size_t i = 0; i <= m; ++i)
    for (size_t j = 0; j < k; ++j) t(j, i) = hat(i, j);
  RatMat telim = t;
  std::vector<size_t> rows;
  {
    // Row echelon on telim; pivot columns of t^T are the chosen rows of hat.
    size_t prow = 0;
    for (size_t col = 0; col <= m && prow < k; ++col) {
      size_t sel = prow;
      while (sel < k && telim(sel, col) == 0) ++sel;
      if (sel == k) continue;
      if (sel != prow)
        for (size_t j = 0; j <= m; ++j) std::swap(telim(sel, j), telim(prow, j));
      for (size_t i = prow + 1; i < k; ++i) {
        if (telim(i, col) == 0) continue;
        Rat f = telim(i, col) / telim(prow, col);
        for (size_t j = col; j <= m; ++j) telim(i, j) -= f * telim(prow, j);
      }
      rows.push_back(col);
      ++prow;
    }
  }
  if (rows.size() != k)
    throw ValidationError("Simplex: vertices are affinely dependent (degenerate simplex)");

  RatMat ar(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) ar(i, j) = hat(rows[i], j);
  RatMat inv = inverse(ar);

  SimplexPredicate pred;
  // lambda_i(x) = sum_t inv(i, t) * [x; 1]_{rows[t]}
  for (size_t i = 0; i < k; ++i) {
    AffForm f;
    f.coef.assign(m, Rat(0));
    f.constant = 0;
    for (size_t t2 = 0; t2 < k; ++t2) {
      if (rows[t2] == m)
        f.constant += inv(i, t2);
      else
        f.coef[rows[t2]] += inv(i, t2);
    }
    pred.bary.push_back(std::move(f));
  }
  // Residuals for the rows not used to define lambda.
  for (size_t j = 0; j <= m; ++j) {
    if (std::find(rows.begin(), rows.end(), j) != rows.end()) continue;
    AffForm g;
    g.coef.assign(m, Rat(0));
    g.constant = 0;
    for (size_t i = 0; i < k; ++i) {
      g.coef = vec_add(g.coef, vec_scale(hat(j, i), pred.bary[i].coef));
      g.constant += hat(j, i) * pred.bary[i].constant;
    }
    if (j == m)
      g.constant -= 1;
    else
      g.coef[j] -= 1;
    pred.residual.push_back(std::move(g));
  }
  for (const auto& f : pred.bary) pred.bary_int.push_back(clear_form(f));
  for (const auto& f : pred.residual) pred.residual_int.push_back(clear_form(f));
  return pred;
}

}  // namespace

Simplex::Simplex(std::vector<RatVec> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw ValidationError("Simplex: no vertices");
  size_t m = verts_[0].size();
  for (const RatVec& v : verts_)
    if (v.size() != m) throw ValidationError("Simplex: mixed vertex dimensions");
  std::sort(verts_.begin(), verts_.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  for (size_t i = 1; i < verts_.size(); ++i)
    if (verts_[i] == verts_[i - 1]) throw ValidationError("Simplex: repeated vertex");
  pred_ = build_predicate(verts_);
}

AffineSpan Simplex::aff() const {
  AffineSpan s;
  s.base = verts_[0];
  for (size_t i = 1; i < verts_.size(); ++i) s.dirs.push_back(vec_sub(verts_[i], verts_[0]));
  return s;
}

RatVec Simplex::barycenter() const {
  RatVec b(ambient(), Rat(0));
  for (const RatVec& v : verts_) b = vec_add(b, v);
  return vec_scale(Rat(1, static_cast<unsigned>(verts_.size())), b);
}

std::optional<RatVec> Simplex::barycentric(const RatVec& p) const {
  if (!pred_.on_aff(p)) return std::nullopt;
  RatVec lambda;
  lambda.reserve(verts_.size());
  for (const auto& f : pred_.bary) lambda.push_back(f.eval(p));
  return lambda;
}

bool Simplex::has_face(const Simplex& other) const {
  for (const RatVec& v : other.vertices())
    if (std::find(verts_.begin(), verts_.end(), v) == verts_.end()) return false;
  return true;
}

bool aff_equal(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return false;
  for (const RatVec& v : b.vertices())
    if (!a.predicate().on_aff(v)) return false;
  for (const RatVec& v : a.vertices())
    if (!b.predicate().on_aff(v)) return false;
  return true;
}

std::vector<RatVec> intersection_vertices(const Simplex& s, const Simplex& t) {
  size_t m = s.ambient();
  if (t.ambient() != m) throw ValidationError("intersection_vertices: ambient mismatch");

  // aff(S) ∩ aff(T) as the solution set of the stacked residual systems.
  std::vector<std::vector<Rat>> rows;
  RatVec rhs;
  auto push_residuals = [&](const Simplex& x) {
    for (const auto& r : x.predicate().residual) {
      rows.push_back(r.coef);
      rhs.push_back(-r.constant);
    }
  };
  push_residuals(s);
  push_residuals(t);

  RatVec base;
  std::vector<RatVec> dirs;
  if (rows.empty()) {
    base.assign(m, Rat(0));
    for (size_t i = 0; i < m; ++i) {
      RatVec e(m, Rat(0));
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
  } else {
    auto sol = solve_general(RatMat::from_rows(rows), rhs);
    if (!sol) return {};
    base = sol->particular;
    dirs = sol->kernel;
  }

  // Facet constraints composed with x = base + D y.
  struct YForm {
    RatVec coef;
    Rat constant;
  };
  std::vector<YForm> forms;
  auto push_bary = [&](const Simplex& x) {
    for (const auto& f : x.predicate().bary) {
      YForm g;
      g.constant = f.eval(base);
      g.coef.assign(dirs.size(), Rat(0));
      for (size_t j = 0; j < dirs.size(); ++j) g.coef[j] = dot(f.coef, dirs[j]);
      forms.push_back(std::move(g));
    }
  };
  push_bary(s);
  push_bary(t);

  size_t k = dirs.size();
  std::vector<RatVec> found;
  auto feasible = [&](const RatVec& y) {
    for (const auto& g : forms) {
      if (dot(g.coef, y) + g.constant < 0) return false;
    }
    return true;
  };
  auto emit = [&](const RatVec& y) {
    RatVec x = base;
    for (size_t j = 0; j < k; ++j) x = vec_add(x, vec_scale(y[j], dirs[j]));
    found.push_back(std::move(x));
  };

  if (k == 0) {
    RatVec y0;
    if (feasible(y0)) emit(y0);
  } else {
    // Every vertex is the unique solution of k active constraints.
    std::vector<size_t> idx(k);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t chosen) {
      if (chosen == k) {
        std::vector<std::vector<Rat>> a;
        RatVec b;
        for (size_t j = 0; j < k; ++j) {
          a.push_back(forms[idx[j]].coef);
          b.push_back(-forms[idx[j]].constant);
        }
        auto sol = solve_general(RatMat::from_rows(a), b);
        if (sol && sol->kernel.empty() && feasible(sol->particular)) emit(sol->particular);
        return;
      }
      for (size_t i = start; i < forms.size(); ++i) {
        idx[chosen] = i;
        rec(i + 1, chosen + 1);
      }
    };
    rec(0, 0);
  }

  std::sort(found.begin(), found.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace unitstate
