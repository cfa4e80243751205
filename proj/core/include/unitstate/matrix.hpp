#pragma once

#include "unitstate/rational.hpp"

#include <optional>
#include <vector>

namespace unitstate {

// Dense row-major matrix. Immutable by convention: operations return new
// values rather than mutating their inputs.
template <typename T>
struct Mat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat from_columns(const std::vector<std::vector<T>>& cols_in) {
    if (cols_in.empty()) return Mat(0, 0);
    Mat m(cols_in[0].size(), cols_in.size());
    for (size_t j = 0; j < cols_in.size(); ++j)
      for (size_t i = 0; i < m.rows; ++i) m(i, j) = cols_in[j][i];
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<T>>& rows_in) {
    if (rows_in.empty()) return Mat(0, 0);
    Mat m(rows_in.size(), rows_in[0].size());
    for (size_t i = 0; i < rows_in.size(); ++i)
      for (size_t j = 0; j < m.cols; ++j) m(i, j) = rows_in[i][j];
    return m;
  }

  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  std::vector<T> column(size_t j) const {
    std::vector<T> c(rows);
    for (size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> row(size_t i) const {
    std::vector<T> r(cols);
    for (size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using RatMat = Mat<Rat>;
using IntMat = Mat<Int>;

RatMat mat_mul(const RatMat& a, const RatMat& b);
IntMat mat_mul(const IntMat& a, const IntMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& x);
IntVec mat_vec(const IntMat& a, const IntVec& x);

RatMat to_rat(const IntMat& m);

size_t rank(const RatMat& m);
Rat det(const RatMat& m);
Int det(const IntMat& m);  // fraction-free Bareiss

// Unique solution of A x = b when A has full column rank and the system is
// consistent; nullopt when inconsistent. Throws if the solution is not
// unique (rank-deficient A).
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

// General solution of A x = b: a particular solution plus a basis of the
// kernel; nullopt when inconsistent.
struct AffineSolution {
  RatVec particular;
  std::vector<RatVec> kernel;
};
std::optional<AffineSolution> solve_general(const RatMat& a, const RatVec& b);

// Basis of { x : A x = 0 }.
std::vector<RatVec> kernel_basis(const RatMat& a);

RatMat inverse(const RatMat& m);  // throws ValidationError if singular

}  // namespace unitstate
