#include "unitstate/matrix.hpp"

namespace unitstate {

namespace {

// Row echelon with full bookkeeping: returns pivot column per pivot row.
// The matrix is reduced in place (Gauss-Jordan, exact rationals).
std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < m.cols && prow < m.rows; ++col) {
    size_t sel = prow;
    while (sel < m.rows && m(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != prow)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(prow, j));
    Rat inv = Rat(1) / m(prow, col);
    for (size_t j = col; j < m.cols; ++j) m(prow, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == prow || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  RatMat out(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec out(a.rows);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) out[i] += a(i, j) * x[j];
  return out;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  IntVec out(a.rows);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) out[i] += a(i, j) * x[j];
  return out;
}

RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

size_t rank(const RatMat& m) {
  RatMat w = m;
  return rref(w).size();
}

Rat det(const RatMat& m) {
  if (m.rows != m.cols) throw ValidationError("det: matrix not square");
  RatMat w = m;
  Rat d = 1;
  for (size_t col = 0; col < w.cols; ++col) {
    size_t sel = col;
    while (sel < w.rows && w(sel, col) == 0) ++sel;
    if (sel == w.rows) return 0;
    if (sel != col) {
      for (size_t j = 0; j < w.cols; ++j) std::swap(w(sel, j), w(col, j));
      d = -d;
    }
    d *= w(col, col);
    Rat inv = Rat(1) / w(col, col);
    for (size_t i = col + 1; i < w.rows; ++i) {
      if (w(i, col) == 0) continue;
      Rat f = w(i, col) * inv;
      for (size_t j = col; j < w.cols; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw ValidationError("det: matrix not square");
  size_t n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      size_t sel = k + 1;
      while (sel < n && w(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(w(sel, j), w(k, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

std::optional<AffineSolution> solve_general(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows, a.cols + 1);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;

  std::vector<bool> is_pivot(a.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;

  AffineSolution sol;
  sol.particular.assign(a.cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, a.cols);

  for (size_t c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec k(a.cols, Rat(0));
    k[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug(r, c);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
  auto sol = solve_general(a, b);
  if (!sol) return std::nullopt;
  if (!sol->kernel.empty()) throw ValidationError("solve_unique: solution not unique");
  return sol->particular;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
  auto sol = solve_general(a, RatVec(a.rows, Rat(0)));
  return sol->kernel;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw ValidationError("inverse: matrix not square");
  size_t n = m.rows;
  RatMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw ValidationError("inverse: matrix is singular");
  RatMat out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace unitstate
