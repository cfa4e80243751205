#include "unitstate/lattice.hpp"

namespace unitstate {

namespace {

void negate_col(IntMat& m, size_t j) {
  for (size_t i = 0; i < m.rows; ++i) m(i, j) = -m(i, j);
}

void swap_cols(IntMat& m, size_t j, size_t k) {
  for (size_t i = 0; i < m.rows; ++i) std::swap(m(i, j), m(i, k));
}

// col_j -= t * col_k
void axpy_col(IntMat& m, size_t j, size_t k, const Int& t) {
  if (t == 0) return;
  for (size_t i = 0; i < m.rows; ++i) m(i, j) -= t * m(i, k);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HnfResult hnf(const IntMat& a) {
  HnfResult res;
  res.h = a;
  res.u = IntMat::identity(a.cols);
  IntMat& h = res.h;
  IntMat& u = res.u;

  size_t piv = 0;
  for (size_t i = 0; i < a.rows && piv < a.cols; ++i) {
    // Gather the row's tail into column piv by the Euclidean algorithm.
    size_t first = piv;
    while (first < a.cols && h(i, first) == 0) ++first;
    if (first == a.cols) continue;
    if (first != piv) {
      swap_cols(h, piv, first);
      swap_cols(u, piv, first);
    }
    if (h(i, piv) < 0) {
      negate_col(h, piv);
      negate_col(u, piv);
    }
    for (size_t k = piv + 1; k < a.cols; ++k) {
      while (h(i, k) != 0) {
        Int q = floor_div(h(i, k), h(i, piv));
        axpy_col(h, k, piv, q);
        axpy_col(u, k, piv, q);
        if (h(i, k) != 0) {
          swap_cols(h, piv, k);
          swap_cols(u, piv, k);
        }
      }
    }
    // Reduce the entries left of the pivot into [0, pivot).
    for (size_t k = 0; k < piv; ++k) {
      Int q = floor_div(h(i, k), h(i, piv));
      axpy_col(h, k, piv, q);
      axpy_col(u, k, piv, q);
    }
    ++piv;
  }
  res.rank = piv;
  return res;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
  HnfResult r = hnf(a);
  std::vector<IntVec> out;
  for (size_t j = r.rank; j < a.cols; ++j) out.push_back(r.u.column(j));
  return out;
}

std::vector<IntVec> lattice_basis(const std::vector<RatVec>& spanning) {
  if (spanning.empty()) return {};
  size_t m = spanning[0].size();
  for (const RatVec& v : spanning)
    if (v.size() != m) throw ValidationError("lattice_basis: mixed vector lengths");

  // Equations cutting out span(V): a basis of the orthogonal complement,
  // cleared to integers. The saturated lattice is then the integer kernel.
  RatMat rows = RatMat::from_rows(std::vector<std::vector<Rat>>(spanning.begin(), spanning.end()));
  std::vector<RatVec> complement = kernel_basis(rows);
  if (complement.empty()) {
    // span is all of Q^m
    std::vector<IntVec> std_basis;
    for (size_t i = 0; i < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      std_basis.push_back(std::move(e));
    }
    return std_basis;
  }
  IntMat c(complement.size(), m);
  for (size_t i = 0; i < complement.size(); ++i) {
    IntVec w = clear_denominators(complement[i]);
    for (size_t j = 0; j < m; ++j) c(i, j) = w[j];
  }
  std::vector<IntVec> basis = integer_kernel(c);
  // Drop the degenerate case span = {0}: kernel of full-rank c is empty anyway.
  return basis;
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  auto canonical = [](const std::vector<IntVec>& gens) {
    if (gens.empty()) return IntMat(0, 0);
    IntMat m = IntMat::from_columns(std::vector<std::vector<Int>>(gens.begin(), gens.end()));
    HnfResult r = hnf(m);
    IntMat h(r.h.rows, r.rank);
    for (size_t i = 0; i < r.h.rows; ++i)
      for (size_t j = 0; j < r.rank; ++j) h(i, j) = r.h(i, j);
    return h;
  };
  return canonical(a) == canonical(b);
}

SpanIndex span_index(const AffineSpan& a) {
  size_t m = a.base.size();
  for (const RatVec& d : a.dirs)
    if (d.size() != m) throw ValidationError("span_index: mixed vector lengths");

  // Equations C x = gamma for the span, with C integer of full row rank.
  std::vector<RatVec> complement;
  if (a.dirs.empty()) {
    for (size_t i = 0; i < m; ++i) {
      RatVec e(m, Rat(0));
      e[i] = 1;
      complement.push_back(std::move(e));
    }
  } else {
    RatMat rows = RatMat::from_rows(std::vector<std::vector<Rat>>(a.dirs.begin(), a.dirs.end()));
    complement = kernel_basis(rows);
  }
  if (complement.empty()) {
    // The span is all of R^m; the origin is an integer point of 1*A.
    return SpanIndex{Int(1), IntVec(m, Int(0))};
  }

  size_t s = complement.size();
  IntMat c(s, m);
  RatVec gamma(s);
  for (size_t i = 0; i < s; ++i) {
    IntVec w = clear_denominators(complement[i]);
    for (size_t j = 0; j < m; ++j) c(i, j) = w[j];
    gamma[i] = dot(w, a.base);
  }

  HnfResult r = hnf(c);
  if (r.rank != s) throw ValidationError("span_index: equation rows not independent");

  // Forward substitution on the lower-triangular pivot block H_s z = gamma.
  RatVec z(s);
  for (size_t i = 0; i < s; ++i) {
    Rat acc = gamma[i];
    for (size_t j = 0; j < i; ++j) acc -= Rat(r.h(i, j)) * z[j];
    if (r.h(i, i) == 0) throw ValidationError("span_index: unexpected zero pivot");
    z[i] = acc / Rat(r.h(i, i));
  }

  Int b = 1;
  for (const Rat& zi : z) b = lcm(b, den(zi));

  IntVec zhat(c.cols, Int(0));
  for (size_t i = 0; i < s; ++i) zhat[i] = num(z[i]) * (b / den(z[i]));
  IntVec point = mat_vec(r.u, zhat);
  return SpanIndex{b, point};
}

std::optional<IntVec> unit_functional(const std::vector<RatVec>& points) {
  if (points.empty()) return std::nullopt;
  size_t m = points[0].size();
  RatMat a = RatMat::from_rows(std::vector<std::vector<Rat>>(points.begin(), points.end()));
  auto sol = solve_general(a, RatVec(points.size(), Rat(1)));
  if (!sol) return std::nullopt;
  SpanIndex si = span_index(AffineSpan{sol->particular, sol->kernel});
  if (si.index != 1) return std::nullopt;
  if (si.point.size() != m) throw ValidationError("unit_functional: dimension mismatch");
  return si.point;
}

}  // namespace unitstate
