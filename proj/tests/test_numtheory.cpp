#include "fixtures.hpp"
#include "unitstate/numtheory.hpp"

#include <doctest.h>

#include <cmath>

using namespace unitstate;

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK_THROWS_AS(mobius(0), ValidationError);
}

TEST_CASE("jordan_phi") {
  CHECK(jordan_phi(1, 6) == 2);
  CHECK(jordan_phi(2, 2) == 3);
  CHECK(jordan_phi(3, 1) == 1);
  CHECK(jordan_phi(1, 1) == 1);

  // Euler totient by direct coprime count.
  for (uint64_t k = 1; k <= 60; ++k) {
    Int direct = 0;
    for (uint64_t a = 1; a <= k; ++a)
      if (std::gcd(a, k) == 1) ++direct;
    CHECK(jordan_phi(1, k) == direct);
  }

  // Divisor-sum formula: phi_d(k) = sum_{h|k} mu(k/h) h^d.
  for (int d = 1; d <= 3; ++d) {
    for (uint64_t k = 1; k <= 40; ++k) {
      Int acc = 0;
      for (uint64_t h : divisors(k)) {
        Int hd = 1;
        for (int i = 0; i < d; ++i) hd *= Int(h);
        acc += mobius(k / h) * hd;
      }
      CHECK(jordan_phi(d, k) == acc);
    }
  }
}

TEST_CASE("jordan duality: sum of phi_d over divisors is k^d") {
  for (int d = 1; d <= 3; ++d) {
    for (uint64_t k = 1; k <= 200; ++k) {
      Int acc = 0;
      for (uint64_t h : divisors(k)) acc += jordan_phi(d, h);
      Int kd = 1;
      for (int i = 0; i < d; ++i) kd *= Int(k);
      CHECK(acc == kd);
    }
  }
}

TEST_CASE("jordan_sum") {
  CHECK(jordan_sum(1, 3) == 4);
  CHECK(jordan_sum(1, 1) == 1);
  CHECK(jordan_sum(2, 2) == 4);
  std::vector<Int> table = jordan_sum_table(2, 50);
  Int acc = 0;
  for (uint64_t k = 1; k <= 50; ++k) {
    acc += jordan_phi(2, k);
    CHECK(table[k] == acc);
  }
}

TEST_CASE("zeta against the classical constants") {
  CHECK(std::abs(zeta(2) - M_PI * M_PI / 6) < 1e-12);
  CHECK(std::abs(zeta(3) - 1.2020569031595943) < 1e-12);
  CHECK(std::abs(zeta(4) - std::pow(M_PI, 4) / 90) < 1e-12);
}

TEST_CASE("partial sums approach k^{d+1}/((d+1) zeta(d+1))") {
  uint64_t k = 100000;
  std::vector<Int> p1 = jordan_sum_table(1, k);
  std::vector<Int> p2 = jordan_sum_table(2, k);
  double r1 = p1[k].convert_to<double>() * 2 * zeta(2) / std::pow(static_cast<double>(k), 2);
  double r2 = p2[k].convert_to<double>() * 3 * zeta(3) / std::pow(static_cast<double>(k), 3);
  CHECK(std::abs(r1 - 1) <= 0.01);
  CHECK(std::abs(r2 - 1) <= 0.01);
}
