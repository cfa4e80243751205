#pragma once

#include "unitstate/problem.hpp"

#include <random>

// Shared fixture builders and small helpers for the test suites.
namespace fixtures {

using namespace unitstate;

inline Rat q(long long p, long long d = 1) { return Rat(p, d); }

inline RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

// The five simplexes S1..S5 in the unit square at x3 = 1.
inline PolytopalComplex example28() {
  std::vector<Simplex> cells;
  cells.push_back(Simplex({rv({q(0), q(1, 3), q(1)}), rv({q(1, 3), q(1), q(1)}), rv({q(1, 9), q(8, 9), q(1)})}));
  cells.push_back(Simplex({rv({q(1, 2), q(1, 4), q(1)}), rv({q(1), q(1, 2), q(1)})}));
  cells.push_back(Simplex({rv({q(1, 3), q(3, 5), q(1)}), rv({q(1, 3), q(1), q(1)})}));
  cells.push_back(Simplex({rv({q(1, 2), q(1, 2), q(1)})}));
  cells.push_back(Simplex({rv({q(2, 7), q(1, 7), q(1)})}));
  return PolytopalComplex(3, std::move(cells));
}

inline Simplex s1() { return example28().cell(0); }
inline Simplex s2() { return example28().cell(1); }
inline Simplex s3() { return example28().cell(2); }

// W = [0,1] at x2 = 1.
inline PolytopalComplex segment() {
  return PolytopalComplex(2, {Simplex({rv({q(0), q(1)}), rv({q(1), q(1)})})});
}

// Unit square as two triangles sharing the main diagonal.
inline PolytopalComplex square() {
  std::vector<Simplex> cells;
  cells.push_back(Simplex({rv({q(0), q(0), q(1)}), rv({q(1), q(0), q(1)}), rv({q(1), q(1), q(1)})}));
  cells.push_back(Simplex({rv({q(0), q(0), q(1)}), rv({q(1), q(1), q(1)}), rv({q(0), q(1), q(1)})}));
  return PolytopalComplex(3, std::move(cells));
}

// Two isolated points 0 and 1 in [0,1].
inline PolytopalComplex twopoint() {
  std::vector<Simplex> cells;
  cells.push_back(Simplex({rv({q(0), q(1)})}));
  cells.push_back(Simplex({rv({q(1), q(1)})}));
  return PolytopalComplex(2, std::move(cells));
}

inline Term tm(const std::string& text, int max_var) { return parse_term(text, max_var); }

inline std::string fixture_path(const std::string& name) {
  return std::string(UNITSTATE_FIXTURE_DIR) + "/" + name;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }

  Rat rational(long long max_num = 20, long long max_den = 12) {
    return Rat(integer(-max_num, max_num), integer(1, max_den));
  }

  Rat rational_nonneg(long long max_num = 20, long long max_den = 12) {
    return Rat(integer(0, max_num), integer(1, max_den));
  }

  // Random rational point of a simplex via random barycentric weights.
  RatVec point_in(const Simplex& s) {
    const auto& verts = s.vertices();
    std::vector<Int> w(verts.size());
    Int total = 0;
    for (Int& x : w) {
      x = integer(0, 64);
      total += x;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    RatVec p(s.ambient(), Rat(0));
    for (size_t j = 0; j < verts.size(); ++j) p = vec_add(p, vec_scale(Rat(w[j], total), verts[j]));
    return p;
  }
};

}  // namespace fixtures
