#include "unitstate/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace unitstate {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) throw ValidationError("is_primitive: undefined gcd normalization for the zero vector");
  return g == 1;
}

Int denominator(const RatVec& w) {
  Int d = 1;
  for (const Rat& x : w) d = lcm(d, den(x));
  return d;
}

IntVec primitive_of(const RatVec& w) {
  Int d = denominator(w);
  IntVec out;
  out.reserve(w.size());
  for (const Rat& x : w) out.push_back(num(x) * (d / den(x)));
  return out;
}

IntVec to_int_vec(const RatVec& w) {
  IntVec out;
  out.reserve(w.size());
  for (const Rat& x : w) {
    if (den(x) != 1) throw ValidationError("to_int_vec: entry " + rat_str(x) + " is not integral");
    out.push_back(num(x));
  }
  return out;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(Rat(x));
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

IntVec normalize_primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  for (const Int& x : out) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : out) y = -y;
      break;
    }
  }
  return out;
}

IntVec clear_denominators(const RatVec& v) {
  Int d = denominator(v);
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = num(v[i]) * (d / den(v[i]));
  return out;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw ValidationError("parse_rat: zero denominator in \"" + text + "\"");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw ValidationError("parse_rat: malformed rational \"" + text + "\"");
  }
}

std::string vec_str(const RatVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += rat_str(v[i]);
  }
  return out;
}

std::string vec_str(const IntVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i].str();
  }
  return out;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace unitstate
