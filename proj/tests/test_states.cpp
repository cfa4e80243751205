#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace unitstate;
using fixtures::iv;
using fixtures::q;
using fixtures::rv;
using fixtures::tm;

namespace {

Element elem(const std::string& text, int n) { return Element::from_term(fixtures::tm(text, n)); }

}  // namespace

TEST_CASE("top state on the segment and on example28") {
  StateReport seg = state(elem("x1", 1), Term::one(), fixtures::segment());
  CHECK(seg.value == q(1, 2));
  CHECK(seg.total_mass == 1);

  StateReport ex = state(elem("x1", 2), Term::one(), fixtures::example28());
  CHECK(ex.value == q(4, 27));
  CHECK(ex.total_mass == q(1, 18));
  REQUIRE(ex.per_simplex.size() == 1);  // only S1 carries the top-level mass
  CHECK(ex.per_simplex[0].origin == 0);

  // value * mass = sum of per-cell contributions.
  Rat acc = 0;
  for (const auto& c : ex.per_simplex) acc += c.nu * c.average;
  CHECK(ex.value * ex.total_mass == acc);
}

TEST_CASE("normalization: the unit has state 1") {
  for (const Term& u : {Term::one(), tm("x1 \\/ (1 - x1)", 1), tm("x1 \\/ (1 - 2*x1)", 1)}) {
    StateReport rep = state(Element::from_term(u), u, fixtures::segment());
    CHECK(rep.value == 1);
  }
  CHECK(state(elem("1", 2), Term::one(), fixtures::example28()).value == 1);
}

TEST_CASE("state rejects non-units and negative elements") {
  CHECK_THROWS_WITH_AS(state(elem("x1", 1), tm("x1", 1), fixtures::segment()),
                       doctest::Contains("not a unit"), ValidationError);
  CHECK_THROWS_WITH_AS(state(elem("x1 - 1", 1), Term::one(), fixtures::segment()),
                       doctest::Contains("negative"), ValidationError);
}

TEST_CASE("level states on example28") {
  PolytopalComplex ex = fixtures::example28();
  CHECK(state_level(elem("x1", 2), Term::one(), ex, 0).value == q(11, 28));
  CHECK(state_level(elem("x1", 2), Term::one(), ex, 1).value == q(167, 276));
  CHECK(state_level(elem("x1", 2), Term::one(), ex, 2).value == q(4, 27));
  CHECK(state_level(elem("x1", 2), Term::one(), ex, 1).total_mass == q(23, 60));
  CHECK_THROWS_WITH_AS(state_level(elem("x1", 2), Term::one(), ex, 3),
                       doctest::Contains("empty level"), ValidationError);
}

TEST_CASE("weighted states") {
  PolytopalComplex ex = fixtures::example28();
  std::vector<Rat> uniform = {q(1, 3), q(1, 3), q(1, 3)};
  WeightedReport rep = state_weighted(elem("x1", 2), Term::one(), ex, uniform);
  CHECK(rep.levels == std::vector<int>{0, 1, 2});
  CHECK(rep.value == (q(11, 28) + q(167, 276) + q(4, 27)) / 3);
  CHECK(rep.value == q(4982, 13041));

  // Concentrated on the top level: equals the plain state.
  WeightedReport top = state_weighted(elem("x1", 2), Term::one(), ex, {q(0), q(0), q(1)});
  CHECK(top.value == q(4, 27));

  // Vanishing element.
  WeightedReport zero = state_weighted(elem("x1 -. x1", 2), Term::one(), ex, uniform);
  CHECK(zero.value == 0);

  CHECK_THROWS_WITH_AS(state_weighted(elem("x1", 2), Term::one(), ex, {q(1, 2), q(1, 2)}),
                       doctest::Contains("weight count mismatch"), ValidationError);
  CHECK_THROWS_WITH_AS(state_weighted(elem("x1", 2), Term::one(), ex, {q(1, 2), q(1, 4), q(1, 8)}),
                       doctest::Contains("sum to 1"), ValidationError);
}

TEST_CASE("tau0 reference measure") {
  PolytopalComplex ex = fixtures::example28();
  CHECK(tau0_reference(elem("x1", 2), ex) == q(19, 42));

  // Single isolated point: the value of h there.
  PolytopalComplex pt(3, {Simplex({rv({q(1, 3), q(2, 3), q(1)})})});
  CHECK(tau0_reference(elem("x1", 2), pt) == q(1, 3));

  // All denominators 1: tau0 collapses onto the level-0 state.
  PolytopalComplex corners(3, {Simplex({rv({q(0), q(0), q(1)})}), Simplex({rv({q(1), q(1), q(1)})})});
  CHECK(tau0_reference(elem("x1", 2), corners) ==
        state_level(elem("x1", 2), Term::one(), corners, 0).value);

  CHECK_THROWS_WITH_AS(tau0_reference(elem("x1", 1), fixtures::segment()),
                       doctest::Contains("empty level 0"), ValidationError);
}

TEST_CASE("linearity and monotonicity of the state") {
  PolytopalComplex seg = fixtures::segment();
  Term u = tm("x1 \\/ (1 - x1)", 1);
  Rat a = state(elem("x1", 1), u, seg).value;
  Rat b = state(elem("1 - x1", 1), u, seg).value;
  Rat ab = state(elem("x1 + (1 - x1)", 1), u, seg).value;
  CHECK(ab == a + b);
  // x1 <= 1 vertexwise on [0,1].
  CHECK(state(elem("x1", 1), u, seg).value <= state(elem("1", 1), u, seg).value);
}

TEST_CASE("reflection invariance of the hat state") {
  PolytopalComplex seg = fixtures::segment();
  Term u = tm("x1 \\/ (1 - x1)", 1);
  Rat left = state(elem("x1", 1), u, seg).value;
  Rat right = state(elem("1 - x1", 1), u, seg).value;
  CHECK(left == right);
  CHECK(left == q(3, 4));
}

TEST_CASE("cesaro averages approach the exact state") {
  PolytopalComplex seg = fixtures::segment();
  Rat exact = state(elem("x1", 1), Term::one(), seg).value;
  REQUIRE(exact == q(1, 2));
  EnumerationRun run = enumerate_primitive(seg, Term::one(), 50);
  Rat last = cesaro_partials(run, Term::variable(1)).back();
  CHECK(std::abs(to_double(last - exact)) <= 0.05);

  // The hat unit redistributes the discrete states; the averages still
  // track the exact hat state.
  Term hat = tm("x1 \\/ (1 - x1)", 1);
  Rat exact_hat = state(elem("x1", 1), hat, seg).value;
  EnumerationRun run_hat = enumerate_primitive(seg, hat, 60);
  Rat last_hat = cesaro_partials(run_hat, Term::variable(1)).back();
  CHECK(std::abs(to_double(last_hat - exact_hat)) <= 0.05);
}

TEST_CASE("faithfulness of the weighted state") {
  PolytopalComplex ex = fixtures::example28();
  // Affine element supported on S3 only, vanishing at the contact vertex
  // with S1: f = x3 - x2 there, zero elsewhere.
  PerSimplexForms forms;
  forms[2] = iv({0, -1, 1});
  Element bump = Element::from_forms(forms);

  CHECK(state(bump, Term::one(), ex).value == 0);
  WeightedReport faithful = state_weighted(bump, Term::one(), ex, {q(1, 3), q(1, 3), q(1, 3)});
  CHECK(faithful.value == q(8, 345));
  CHECK(faithful.value > 0);
  WeightedReport skip1 = state_weighted(bump, Term::one(), ex, {q(1, 2), q(0), q(1, 2)});
  CHECK(skip1.value == 0);
}

TEST_CASE("density constant") {
  PolytopalComplex seg = fixtures::segment();
  DensityReport same = density_constant(Term::one(), Term::one(), seg);
  CHECK(same.c == 1);

  // u2 = 2*1l: W_2 is the halved segment on {x2 = 1/2}, whose span has
  // index 2; the lattice-normalized mass is 1/4 and C = D1/D2 = 4. Cross
  // check: C = (int_0^1 u1^3/u2^2)^{-1} = (1/4)^{-1}.
  DensityReport twice = density_constant(Term::one(), tm("2*1", 1), seg);
  CHECK(twice.d1 == 1);
  CHECK(twice.d2 == q(1, 4));
  CHECK(twice.c == 4);

  DensityReport hat = density_constant(Term::one(), tm("x1 \\/ (1 - x1)", 1), seg);
  CHECK(hat.d2 == 2);
  CHECK(hat.c == q(1, 2));

  CHECK_THROWS_AS(density_constant(Term::one(), tm("x1", 1), seg), ValidationError);
}

TEST_CASE("density verification, zero-dimensional") {
  PolytopalComplex tp = fixtures::twopoint();
  Term u2 = tm("x1 + 1", 1);
  DensityReport rep = verify_density(elem("x1", 1), Term::one(), u2, tp, 0);
  CHECK(rep.dim == 0);
  CHECK(rep.exact_match);
  REQUIRE(rep.points.size() == 2);
  // mu_2({p}) = (u1/u2)(p) * mu_1({p}): 1/4 = (1/2)(1/2) at p = 1.
  CHECK(rep.points[1].mu2 == q(1, 4));
  CHECK(rep.points[1].mu2_via_density == q(1, 4));
  CHECK(rep.points[0].mu2 == q(1, 2));
  CHECK(rep.discrepancy == 0);
}

TEST_CASE("density verification, one-dimensional") {
  PolytopalComplex seg = fixtures::segment();
  Term hat = tm("x1 \\/ (1 - x1)", 1);
  // Closed-form oracle: m_2(x1) = 3/4 and the change-of-section integral
  // int_0^1 x / max(x, 1-x)^3 dx = 3/2, divided by D2 = 2.
  DensityReport rep = verify_density(elem("x1", 1), Term::one(), hat, seg, 10);
  CHECK(rep.lhs == q(3, 4));
  CHECK(std::abs(rep.rhs.value - 0.75) <= 1e-4);
  CHECK(rep.discrepancy <= 1e-4);

  double prev = 1;
  for (int level : {2, 4, 6, 8}) {
    DensityReport r = verify_density(elem("x1", 1), Term::one(), hat, seg, level);
    CHECK(r.discrepancy <= prev + 1e-12);
    prev = r.discrepancy;
  }

  // u1 = u2: the integrand is affine on each section cell, so even level 0
  // is exact up to rounding.
  DensityReport triv = verify_density(elem("x1", 1), hat, hat, seg, 0);
  CHECK(triv.c == 1);
  CHECK(triv.discrepancy <= 1e-10);
}

TEST_CASE("dimension estimator") {
  std::vector<Int> farey_grid = {50, 100, 200, 300};
  DimensionReport farey = dimension_estimate(fixtures::segment(), Term::one(), farey_grid);
  CHECK(farey.dim_estimate == 1);
  CHECK(std::abs(farey.slopes.back() - 2.0) < 0.2);
  CHECK_FALSE(farey.stabilized);

  DimensionReport farey_hat =
      dimension_estimate(fixtures::segment(), tm("x1 \\/ (1 - x1)", 1), farey_grid);
  CHECK(farey_hat.dim_estimate == farey.dim_estimate);

  std::vector<Int> square_grid = {25, 50, 75, 100};
  DimensionReport sq = dimension_estimate(fixtures::square(), Term::one(), square_grid);
  CHECK(sq.dim_estimate == 2);

  PolytopalComplex pt(3, {Simplex({rv({q(1, 2), q(1, 2), q(1)})})});
  DimensionReport zero = dimension_estimate(pt, Term::one(), {2, 3, 4, 5});
  CHECK(zero.stabilized);
  CHECK(zero.dim_estimate == 0);
}
