#pragma once

#include "unitstate/rational.hpp"

#include <cstdint>

namespace unitstate {

// Möbius function: 0 on non-squarefree k, else (-1)^(number of prime
// factors). k >= 1.
int mobius(uint64_t k);

// Jordan totient phi_d(k) = k^d * prod_{p | k} (1 - p^{-d}).
Int jordan_phi(int d, uint64_t k);

// Partial sum Phi_d(k) = sum_{t <= k} phi_d(t), computed through a
// smallest-prime-factor sieve.
Int jordan_sum(int d, uint64_t k);

// All of Phi_d(1..kmax); jordan_sum(d, k) == table[k].
std::vector<Int> jordan_sum_table(int d, uint64_t kmax);

// Riemann zeta at integer s >= 2 by direct summation with an
// Euler-Maclaurin tail correction; the truncation point is chosen from the
// requested tolerance (conservatively).
double zeta(int s, double eps = 1e-12);

std::vector<uint64_t> divisors(uint64_t n);

}  // namespace unitstate
