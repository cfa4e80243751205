#include "unitstate/numtheory.hpp"

#include <algorithm>
#include <cmath>

namespace unitstate {

namespace {

std::vector<std::pair<uint64_t, int>> factorize(uint64_t k) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    if (k % p) continue;
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

Int int_pow(const Int& base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

int mobius(uint64_t k) {
  if (k == 0) throw ValidationError("mobius: undefined at 0");
  int parity = 0;
  for (const auto& [p, e] : factorize(k)) {
    if (e > 1) return 0;
    ++parity;
  }
  return parity % 2 == 0 ? 1 : -1;
}

Int jordan_phi(int d, uint64_t k) {
  if (d < 1 || k < 1) throw ValidationError("jordan_phi: requires d >= 1, k >= 1");
  Int r = 1;
  // Multiplicative: phi_d(p^e) = p^{d e} - p^{d (e-1)}.
  for (const auto& [p, e] : factorize(k)) {
    Int pd = int_pow(Int(p), d);
    r *= int_pow(pd, e) - int_pow(pd, e - 1);
  }
  return r;
}

std::vector<Int> jordan_sum_table(int d, uint64_t kmax) {
  if (d < 1) throw ValidationError("jordan_sum_table: requires d >= 1");
  std::vector<uint32_t> spf(kmax + 1, 0);
  for (uint64_t i = 2; i <= kmax; ++i) {
    if (spf[i]) continue;
    for (uint64_t j = i; j <= kmax; j += i)
      if (!spf[j]) spf[j] = static_cast<uint32_t>(i);
  }
  std::vector<Int> table(kmax + 1, Int(0));
  for (uint64_t k = 1; k <= kmax; ++k) {
    Int phi = 1;
    uint64_t rest = k;
    while (rest > 1) {
      uint64_t p = spf[rest];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      Int pd = int_pow(Int(p), d);
      phi *= int_pow(pd, e) - int_pow(pd, e - 1);
    }
    table[k] = table[k - 1] + phi;
  }
  return table;
}

Int jordan_sum(int d, uint64_t k) {
  if (k < 1) throw ValidationError("jordan_sum: requires k >= 1");
  return jordan_sum_table(d, k)[k];
}

double zeta(int s, double eps) {
  if (s < 2) throw ValidationError("zeta: requires s >= 2");
  // Direct series to N-1 plus the Euler-Maclaurin tail from N:
  //   sum_{k>=N} k^{-s} = N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12 + R,
  // with |R| = O(s^3 N^{-s-3}). N is chosen from the cruder s N^{-s-1}
  // bound, which already keeps the remainder below eps.
  double n = std::pow(static_cast<double>(s) / eps, 1.0 / (s + 1));
  uint64_t cutoff = std::max<uint64_t>(64, static_cast<uint64_t>(n) + 1);
  long double sum = 0;
  for (uint64_t k = cutoff - 1; k >= 1; --k) sum += 1.0L / std::pow(static_cast<long double>(k), s);
  long double nd = static_cast<long double>(cutoff);
  sum += std::pow(nd, static_cast<long double>(1 - s)) / (s - 1);
  sum += std::pow(nd, static_cast<long double>(-s)) / 2;
  sum += s * std::pow(nd, static_cast<long double>(-s - 1)) / 12;
  return static_cast<double>(sum);
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace unitstate
