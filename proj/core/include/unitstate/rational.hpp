#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace unitstate {

// Exact arbitrary-precision scalars. Rat is kept canonical by the backend:
// gcd(num, den) = 1, den > 0, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Thrown for input/precondition failures that a caller can act on
// (bad files, non-units, malformed terms, dimension mismatches).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// gcd of all coordinates, nonnegative; zero vector yields 0.
Int vec_gcd(const IntVec& v);

// True iff the gcd of the coordinates is 1. The zero vector has no
// primitive normalization and is rejected.
bool is_primitive(const IntVec& v);

// Least b >= 1 such that b*w is integral.
Int denominator(const RatVec& w);
inline Int denominator(const Rat& x) { return den(x); }

// denominator(w) * w, as an integer vector.
IntVec primitive_of(const RatVec& w);

IntVec to_int_vec(const RatVec& w);  // requires all entries integral
RatVec to_rat_vec(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

// Strict lexicographic order on coordinates; used wherever a deterministic
// vertex or point order is needed.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

// Divide by the gcd of the entries and normalize the sign of the first
// nonzero entry to be positive. Zero vectors are returned unchanged.
IntVec normalize_primitive(const IntVec& v);

// Scale a rational vector to the integer vector den*v (den = common
// denominator); does not reduce by content.
IntVec clear_denominators(const RatVec& v);

// Serialization used in every file format: "p/q", or "p" when q = 1.
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& text);

std::string vec_str(const RatVec& v);  // space separated rat_str entries
std::string vec_str(const IntVec& v);

double to_double(const Rat& r);

}  // namespace unitstate
