#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace unitstate;
using fixtures::iv;
using fixtures::q;
using fixtures::rv;

TEST_CASE("relative volumes of the five worked simplexes") {
  PolytopalComplex ex = fixtures::example28();
  CHECK(nu_simplex(ex.cell(0)) == q(1, 18));
  CHECK(nu_simplex(ex.cell(1)) == q(1, 4));
  CHECK(nu_simplex(ex.cell(2)) == q(2, 15));
  CHECK(nu_simplex(ex.cell(3)) == 1);
  CHECK(nu_simplex(ex.cell(4)) == 1);
}

TEST_CASE("chart route agrees with the lattice-basis route") {
  PolytopalComplex ex = fixtures::example28();
  for (const Simplex& s : ex.cells()) {
    if (s.dim() == 0) continue;
    CHECK(nu_simplex_chart(s) == nu_simplex(s));
  }
  CHECK(nu_simplex_chart(fixtures::segment().cell(0)) == 1);

  // A segment with no integral {a = 1}: only the chart route applies
  // (hand value: base point (0,1), direction lattice (2,-3), length 1/3).
  Simplex skew({rv({q(2, 3), q(0)}), rv({q(0), q(1)})});
  CHECK(nu_simplex(skew) == q(1, 3));
  CHECK(nu_simplex_chart(skew) == q(1, 3));
}

TEST_CASE("chart construction matches the explicit worked chart") {
  // 3*aff(S3) passes through (1,0,3) and (1,1,3); psi[3 S3] has length 6/5.
  Simplex s3 = fixtures::s3();
  Chart chart = build_chart(s3);
  CHECK(chart.index == 3);
  RatVec y0 = chart.coords(vec_scale(q(3), s3.vertices()[0]));
  RatVec y1 = chart.coords(vec_scale(q(3), s3.vertices()[1]));
  REQUIRE(y0.size() == 1);
  Rat len = y1[0] - y0[0];
  if (len < 0) len = -len;
  CHECK(len == q(6, 5));
}

TEST_CASE("nu is invariant under unimodular integer maps") {
  fixtures::Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    // Random small simplex in R^3 with rational vertices.
    int d = static_cast<int>(rng.integer(1, 2));
    std::vector<RatVec> verts;
    for (int i = 0; i <= d; ++i)
      verts.push_back(rv({rng.rational(6, 4), rng.rational(6, 4), rng.rational(6, 4)}));
    Simplex s = [&]() -> Simplex {
      try {
        return Simplex(verts);
      } catch (const ValidationError&) {
        return fixtures::s1();
      }
    }();

    // Random unimodular map: product of elementary shears and swaps.
    IntMat t = IntMat::identity(3);
    for (int step = 0; step < 4; ++step) {
      IntMat e = IntMat::identity(3);
      size_t i = static_cast<size_t>(rng.integer(0, 2));
      size_t j = static_cast<size_t>(rng.integer(0, 2));
      if (i == j) {
        e(i, i) = -1;
      } else {
        e(i, j) = rng.integer(-2, 2);
      }
      t = mat_mul(t, e);
    }
    REQUIRE((det(t) == 1 || det(t) == -1));

    std::vector<RatVec> image;
    for (const RatVec& v : s.vertices()) {
      RatVec w(3, q(0));
      for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) w[r] += Rat(t(r, c)) * v[c];
      image.push_back(std::move(w));
    }
    CHECK(nu_simplex(Simplex(image)) == nu_simplex(s));
  }
}

TEST_CASE("nu additivity under hyperplane splits") {
  fixtures::Rng rng(56);
  PolytopalComplex ex = fixtures::example28();
  for (int trial = 0; trial < 50; ++trial) {
    const Simplex& s = ex.cell(static_cast<size_t>(rng.integer(0, 2)));
    IntVec f = iv({rng.integer(-3, 3), rng.integer(-3, 3), rng.integer(-2, 2)});
    if (is_zero(f)) continue;
    PolytopalComplex split = refine_by_hyperplanes(PolytopalComplex(3, {s}), {f});
    Rat total = 0;
    for (const Simplex& piece : split.cells())
      if (piece.dim() == s.dim()) total += nu_simplex(piece);
    CHECK(total == nu_simplex(s));
  }
}

TEST_CASE("integrate_affine on the worked fixtures") {
  // f = x3 is identically 1 on S1, so the integral is nu(S1).
  CHECK(integrate_affine(iv({0, 0, 1}), fixtures::s1()) == q(1, 18));
  // f = x1 over S2: nu * (1/2 + 1)/2.
  CHECK(integrate_affine(iv({1, 0, 0}), fixtures::s2()) == q(3, 16));
  CHECK(integrate_affine(iv({0, 0, 0}), fixtures::s1()) == 0);
  // Points integrate to the point value.
  PolytopalComplex ex = fixtures::example28();
  CHECK(integrate_affine(iv({1, 0, 0}), ex.cell(4)) == q(2, 7));
}

TEST_CASE("integrate_affine cross-checked by chart quadrature") {
  // Oracle: integrate x1 over S2 through the chart parametrization. S2 runs
  // from (1/2,1/4,1) to (1,1/2,1) with nu = 1/4 uniformly in the parameter,
  // so the integral is 1/4 * avg of x1 = 1/4 * 3/4.
  Simplex s2 = fixtures::s2();
  int n = 4096;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    double t = (i + 0.5) / n;
    double x1 = 0.5 + 0.5 * t;
    acc += x1;
  }
  acc = acc / n * 0.25;
  CHECK(std::abs(to_double(integrate_affine(iv({1, 0, 0}), s2)) - acc) < 1e-9);
}

TEST_CASE("nu_level on example28") {
  PolytopalComplex ex = fixtures::example28();
  std::vector<Simplex> everything(ex.cells().begin(), ex.cells().end());
  CHECK(nu_level(ex, 1, everything) == q(23, 60));
  CHECK(nu_level(ex, 0, everything) == 2);
  CHECK(nu_level(ex, 2, {ex.cell(1)}) == 0);
  CHECK(nu_level(ex, 2, everything) == q(1, 18));
}

TEST_CASE("quadrature: constants and affine integrands") {
  Simplex s1 = fixtures::s1();
  auto one = [](const RatVec&) { return 1.0; };
  for (int level : {0, 2, 4}) {
    QuadratureEstimate e = quadrature_rational(one, s1, level);
    CHECK(std::abs(e.value - 1.0 / 18) < 1e-15);
    CHECK(e.error_bound <= 1e-15);
  }
  auto affine = [](const RatVec& v) { return to_double(v[0]) - 2 * to_double(v[1]) + 0.25; };
  QuadratureEstimate e0 = quadrature_rational(affine, s1, 0);
  IntVec f = iv({4, -8, 1});  // 4*(x1 - 2 x2 + 1/4)
  CHECK(std::abs(e0.value - to_double(integrate_affine(f, s1)) / 4) < 1e-12);
}

TEST_CASE("quadrature converges on a smooth integrand") {
  // g = 1/(x1 + 1) over S2; closed form (1/2) log(4/3).
  Simplex s2 = fixtures::s2();
  auto g = [](const RatVec& v) { return 1.0 / (to_double(v[0]) + 1.0); };
  double expect = 0.5 * std::log(4.0 / 3.0);
  double prev_err = 1;
  for (int level : {2, 4, 6, 10}) {
    QuadratureEstimate e = quadrature_rational(g, s2, level);
    double err = std::abs(e.value - expect);
    CHECK(err < prev_err + 1e-15);
    prev_err = err;
    if (level == 10) CHECK(err < 1e-6);
  }
}

TEST_CASE("quadrature error bound shrinks with the level") {
  Simplex s2 = fixtures::s2();
  auto g = [](const RatVec& v) { return 1.0 / (to_double(v[0]) + 1.0); };
  double prev = 1;
  for (int level : {1, 3, 5, 7}) {
    QuadratureEstimate e = quadrature_rational(g, s2, level);
    CHECK(e.error_bound < prev);
    prev = e.error_bound;
  }
}
