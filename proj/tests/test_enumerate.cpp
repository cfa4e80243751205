#include "fixtures.hpp"
#include "unitstate/numtheory.hpp"

#include <doctest.h>

#include <algorithm>

using namespace unitstate;
using fixtures::iv;
using fixtures::q;
using fixtures::rv;
using fixtures::tm;

namespace {

// Independent completeness oracle: full box scan with barycentric-solve
// membership and an explicitly supplied slice bound.
std::vector<IntVec> oracle_scan(const PolytopalComplex& w, const Term& u, long long t,
                                long long qbound) {
  HomTerm hu = homogenize(u, w.ambient() - 1);
  size_t m = w.ambient();
  std::vector<IntVec> out;
  for (long long qq = 1; qq <= qbound; ++qq) {
    std::vector<long long> x(m - 1, 0);
    while (true) {
      IntVec v;
      for (long long c : x) v.push_back(Int(c));
      v.push_back(Int(qq));
      RatVec p;
      for (size_t i = 0; i < m; ++i) p.push_back(Rat(v[i], Int(qq)));
      bool member = false;
      for (const Simplex& s : w.cells()) {
        auto bc = s.barycentric(p);
        if (!bc) continue;
        bool nonneg = true;
        for (const Rat& l : *bc)
          if (l < 0) nonneg = false;
        if (nonneg) {
          member = true;
          break;
        }
      }
      if (member && vec_gcd(v) == 1 && eval(hu, v) <= t) out.push_back(v);
      size_t i = m - 1;
      bool more = false;
      while (i > 0) {
        --i;
        if (x[i] < qq) {
          ++x[i];
          more = true;
          break;
        }
        x[i] = 0;
      }
      if (!more) break;
    }
  }
  return out;
}

std::vector<IntVec> primitives_of(const EnumerationRun& run) {
  std::vector<IntVec> out;
  for (const DiscreteState& st : run.states) out.push_back(st.primitive);
  return out;
}

}  // namespace

TEST_CASE("farey enumeration at t = 3") {
  EnumerationRun run = enumerate_primitive(fixtures::segment(), Term::one(), 3);
  REQUIRE(run.states.size() == 5);
  std::vector<IntVec> expect = {iv({0, 1}), iv({1, 1}), iv({1, 2}), iv({1, 3}), iv({2, 3})};
  CHECK(primitives_of(run) == expect);
  for (const DiscreteState& st : run.states) {
    CHECK(st.denominator == st.unit_value);
    CHECK(is_primitive(st.primitive));
    CHECK(denominator(st.section_point) == st.unit_value);
  }
  // Xi = Phi_1(3) + 1.
  CHECK(Int(run.states.size()) == jordan_sum(1, 3) + 1);
  CHECK(run.block_size == 1);
  CHECK(run.block_boundaries == std::vector<size_t>{2, 3, 5});
}

TEST_CASE("denominator-1 states of the hat units") {
  for (int k : {1, 2, 3}) {
    Term u = tm("x1 \\/ (1 - " + std::to_string(k) + "*x1)", 1);
    EnumerationRun run = enumerate_primitive(fixtures::segment(), u, 1);
    // k + 2 states of denominator 1 at 0, 1, 1/2, ..., 1/(k+1).
    REQUIRE(run.states.size() == static_cast<size_t>(k) + 2);
    std::vector<Rat> xs;
    for (const DiscreteState& st : run.states) {
      CHECK(st.unit_value == 1);
      xs.push_back(Rat(st.primitive[0], st.primitive[1]));
    }
    std::sort(xs.begin(), xs.end());
    std::vector<Rat> expect = {q(0)};
    for (int j = k + 1; j >= 1; --j) expect.push_back(Rat(1, j));
    std::sort(expect.begin(), expect.end());
    CHECK(xs == expect);
  }
}

TEST_CASE("single rational point has one primitive generator") {
  PolytopalComplex pt(3, {Simplex({rv({q(1, 2), q(1, 2), q(1)})})});
  EnumerationRun run = enumerate_primitive(pt, Term::one(), 5);
  REQUIRE(run.states.size() == 1);
  CHECK(run.states[0].primitive == iv({1, 1, 2}));
  CHECK(run.states[0].unit_value == 2);
  CHECK(xi_count(pt, Term::one(), 1) == 0);
}

TEST_CASE("xi on the unit square at t = 2") {
  CHECK(xi_count(fixtures::square(), Term::one(), 2) == 9);
}

TEST_CASE("enumeration completeness against the box-scan oracle") {
  struct Case {
    PolytopalComplex w;
    Term u;
    long long qbound_per_t;
  };
  std::vector<Case> cases;
  cases.push_back({fixtures::segment(), Term::one(), 1});
  cases.push_back({fixtures::segment(), tm("x1 \\/ (1 - x1)", 1), 2});
  cases.push_back({fixtures::segment(), tm("x1 \\/ (1 - 2*x1)", 1), 3});
  cases.push_back({fixtures::square(), Term::one(), 1});
  cases.push_back({fixtures::example28(), Term::one(), 1});
  for (const Case& c : cases) {
    for (long long t : {5LL, 20LL}) {
      EnumerationRun run = enumerate_primitive(c.w, c.u, Int(t));
      std::vector<IntVec> got = primitives_of(run);
      std::vector<IntVec> want = oracle_scan(c.w, c.u, t, c.qbound_per_t * t);
      std::sort(got.begin(), got.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
      std::sort(want.begin(), want.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
      CHECK(got == want);
    }
  }
}

TEST_CASE("cesaro partial averages on the farey run") {
  EnumerationRun run = enumerate_primitive(fixtures::segment(), Term::one(), 3);
  std::vector<Rat> partials = cesaro_partials(run, Term::variable(1));
  std::vector<Rat> expect = {q(0), q(1, 2), q(1, 2), q(11, 24), q(1, 2)};
  CHECK(partials == expect);

  // h = u gives constant partial 1; h = 0 gives 0.
  for (const Rat& p : cesaro_partials(run, Term::one())) CHECK(p == 1);
  for (const Rat& p : cesaro_partials(run, tm("x1 -. x1", 1))) CHECK(p == 0);
}

TEST_CASE("ehrhart of the standard triangle is binomial(t+2, 2)") {
  Simplex tri({rv({q(0), q(0), q(1)}), rv({q(1), q(0), q(1)}), rv({q(0), q(1), q(1)})});
  for (long long t = 1; t <= 8; ++t)
    CHECK(ehrhart_count(tri, Int(t)) == Int((t + 2) * (t + 1) / 2));
}

TEST_CASE("ehrhart of S3 vanishes off multiples of the index") {
  Simplex s3 = fixtures::s3();
  CHECK(ehrhart_count(s3, 1) == 0);
  CHECK(ehrhart_count(s3, 2) == 0);
  CHECK(ehrhart_count(s3, 3) == 2);
  CHECK(ehrhart_count(s3, 6) == 3);
  // Single integer point dilate.
  Simplex pt({rv({q(1, 2), q(1, 2), q(1)})});
  CHECK(ehrhart_count(pt, 2) == 1);
  CHECK(ehrhart_count(pt, 3) == 0);
}

TEST_CASE("ehrhart quasipolynomial periodicity for S3") {
  // Period divides the lcm of the vertex denominators (15); the counting
  // function is degree-1 per residue class. Fit on the first two samples
  // of each class and check the remaining ones, t <= 60.
  Simplex s3 = fixtures::s3();
  std::vector<Int> values;
  for (long long t = 1; t <= 60; ++t) values.push_back(ehrhart_count(s3, Int(t)));
  const long long period = 15;
  for (long long r = 1; r <= period; ++r) {
    std::vector<std::pair<long long, Int>> samples;
    for (long long t = r; t <= 60; t += period) samples.push_back({t, values[t - 1]});
    REQUIRE(samples.size() >= 3);
    Rat slope = Rat(samples[1].second - samples[0].second) / Rat(samples[1].first - samples[0].first);
    Rat intercept = Rat(samples[0].second) - slope * samples[0].first;
    for (const auto& [t, v] : samples) CHECK(Rat(v) == slope * t + intercept);
  }
}

TEST_CASE("mobius inversion equals the direct primitive count") {
  Simplex seg({rv({q(0), q(1)}), rv({q(1), q(1)})});
  Simplex tri({rv({q(0), q(0), q(1)}), rv({q(1), q(0), q(1)}), rv({q(0), q(1), q(1)})});
  Simplex s3 = fixtures::s3();
  for (long long t = 1; t <= 25; ++t) {
    CHECK(primitive_by_inversion(seg, Int(t)) == primitive_count_direct(seg, Int(t)));
    CHECK(primitive_by_inversion(tri, Int(t)) == primitive_count_direct(tri, Int(t)));
    CHECK(primitive_by_inversion(s3, Int(t)) == primitive_count_direct(s3, Int(t)));
  }
  // t = 1 reduces to the Ehrhart count itself.
  CHECK(primitive_by_inversion(tri, 1) == ehrhart_count(tri, 1));
  // Farey: primitive points in t*[0,1] of the segment.
  CHECK(primitive_by_inversion(seg, 6) == primitive_count_direct(seg, 6));
  CHECK(primitive_by_inversion(seg, 4) == primitive_count_direct(seg, 4));
}

TEST_CASE("block sums are independent of intra-block order") {
  for (const Term& u : {Term::one(), tm("x1 \\/ (1 - x1)", 1)}) {
    EnumerationRun run = enumerate_primitive(fixtures::segment(), u, 40);
    EnumerationRun reversed = run;
    size_t start = 0;
    for (size_t boundary : reversed.block_boundaries) {
      std::reverse(reversed.states.begin() + static_cast<long>(start),
                   reversed.states.begin() + static_cast<long>(boundary));
      start = boundary;
    }
    Term h = Term::variable(1);
    CHECK(block_sums(run, h) == block_sums(reversed, h));
    CHECK(block_partials(run, h) == block_partials(reversed, h));
  }
}

TEST_CASE("a unimodular symmetry of (W, u) permutes each block") {
  Term hat = tm("x1 \\/ (1 - x1)", 1);
  EnumerationRun run = enumerate_primitive(fixtures::segment(), hat, 30);
  // sigma: x1 |-> 1 - x1, homogeneous (v1, v2) |-> (v2 - v1, v2).
  auto mirror = [](const IntVec& v) { return IntVec{Int(v[1] - v[0]), v[1]}; };
  size_t start = 0;
  for (size_t boundary : run.block_boundaries) {
    std::vector<IntVec> block, image;
    for (size_t i = start; i < boundary; ++i) {
      block.push_back(run.states[i].primitive);
      image.push_back(mirror(run.states[i].primitive));
    }
    std::sort(block.begin(), block.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    std::sort(image.begin(), image.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    CHECK(block == image);
    start = boundary;
  }
  // Consequently the block-aligned partials of x1 and of its mirror agree.
  CHECK(block_partials(run, Term::variable(1)) == block_partials(run, tm("1 - x1", 1)));
}
