#include "unitstate/enumerate.hpp"

#include "unitstate/measure.hpp"
#include "unitstate/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace unitstate {

namespace {

size_t worker_count() {
  if (const char* env = std::getenv("UNITSTATE_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<size_t>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Int floor_rat(const Rat& x) {
  Int q = num(x) / den(x);
  if (num(x) < 0 && num(x) % den(x) != 0) --q;
  return q;
}

// States on the slice v_last = q; the first m-1 coordinates run over [0, q].
std::vector<DiscreteState> scan_slice(const PolytopalComplex& w, const HomTerm& hu, const Int& q,
                                      const Int& t) {
  size_t m = w.ambient();
  std::vector<DiscreteState> out;
  IntVec v(m, Int(0));
  v[m - 1] = q;
  bool more = true;
  while (more) {
    if (vec_gcd(v) == 1 && w.contains_scaled(v)) {
      Int uv = eval(hu, v);
      if (uv >= 1 && uv <= t) {
        DiscreteState st;
        st.primitive = v;
        st.unit_value = uv;
        st.denominator = uv;
        st.section_point.reserve(m);
        for (const Int& x : v) st.section_point.push_back(Rat(x, uv));
        out.push_back(std::move(st));
      }
    }
    more = false;
    size_t i = m - 1;
    while (i > 0) {
      --i;
      if (v[i] < q) {
        ++v[i];
        more = true;
        break;
      }
      v[i] = 0;
    }
  }
  return out;
}

Int block_lcm(const PolytopalComplex& section) {
  int d = section.dim();
  Int c = 1;
  for (size_t id : section.max_faces(d)) c = lcm(c, span_index(section.cell(id).aff()).index);
  return c;
}

}  // namespace

EnumerationRun enumerate_primitive(const PolytopalComplex& w, const Term& u, const Int& t) {
  if (t < 1) throw ValidationError("enumerate_primitive: bound must be >= 1");
  if (!validate_cube_embedding(w).empty())
    throw ValidationError("enumerate_primitive: complex is not embedded at x_last = 1");

  Affinization au = require_unit(u, w);
  HomTerm hu = homogenize(u, w.ambient() - 1);

  // Exact minimum of u over W: attained at a vertex of the refined complex.
  Rat min_u;
  bool first = true;
  for (const Simplex& s : au.complex.cells())
    for (const RatVec& v : s.vertices()) {
      Rat x = eval(hu, v);
      if (first || x < min_u) {
        min_u = x;
        first = false;
      }
    }

  EnumerationRun run;
  run.unit = u;
  run.ambient = w.ambient();
  run.bound = t;
  run.block_size = block_lcm(cone_section(au.complex, au.forms));

  size_t qmax = floor_rat(Rat(t) / min_u).convert_to<size_t>();
  std::vector<std::vector<DiscreteState>> per_q(qmax + 1);
  size_t workers = std::min(worker_count(), qmax);
  if (workers <= 1) {
    for (size_t q = 1; q <= qmax; ++q) per_q[q] = scan_slice(w, hu, Int(q), t);
  } else {
    std::vector<std::thread> pool;
    for (size_t wid = 0; wid < workers; ++wid) {
      pool.emplace_back([&, wid] {
        for (size_t q = wid + 1; q <= qmax; q += workers) per_q[q] = scan_slice(w, hu, Int(q), t);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (auto& bucket : per_q)
    for (auto& st : bucket) run.states.push_back(std::move(st));
  std::stable_sort(run.states.begin(), run.states.end(), [](const DiscreteState& a, const DiscreteState& b) {
    if (a.unit_value != b.unit_value) return a.unit_value < b.unit_value;
    return lex_less(a.primitive, b.primitive);
  });

  Int kmax = t / run.block_size;
  size_t idx = 0;
  for (Int k = 1; k <= kmax; ++k) {
    Int cap = run.block_size * k;
    while (idx < run.states.size() && run.states[idx].unit_value <= cap) ++idx;
    run.block_boundaries.push_back(idx);
  }
  return run;
}

Int xi_count(const PolytopalComplex& w, const Term& u, const Int& t) {
  return Int(enumerate_primitive(w, u, t).states.size());
}

std::vector<Rat> cesaro_partials(const EnumerationRun& run, const Term& h) {
  HomTerm hh = homogenize(h, run.ambient - 1);
  std::vector<Rat> partials;
  partials.reserve(run.states.size());
  Rat sum = 0;
  size_t k = 0;
  for (const DiscreteState& st : run.states) {
    sum += Rat(eval(hh, st.primitive), st.unit_value);
    ++k;
    partials.push_back(sum / Rat(static_cast<unsigned long>(k)));
  }
  return partials;
}

std::vector<Rat> block_sums(const EnumerationRun& run, const Term& h) {
  HomTerm hh = homogenize(h, run.ambient - 1);
  std::vector<Rat> sums;
  size_t start = 0;
  for (size_t boundary : run.block_boundaries) {
    Rat s = 0;
    for (size_t i = start; i < boundary; ++i)
      s += Rat(eval(hh, run.states[i].primitive), run.states[i].unit_value);
    sums.push_back(s);
    start = boundary;
  }
  return sums;
}

std::vector<Rat> block_partials(const EnumerationRun& run, const Term& h) {
  std::vector<Rat> sums = block_sums(run, h);
  std::vector<Rat> partials;
  Rat acc = 0;
  for (size_t k = 0; k < sums.size(); ++k) {
    acc += sums[k];
    if (run.block_boundaries[k] > 0)
      partials.push_back(acc / Rat(static_cast<unsigned long>(run.block_boundaries[k])));
    else
      partials.push_back(Rat(0));
  }
  return partials;
}

namespace {

template <typename Visit>
void scan_box(const Simplex& s, const Int& t, Visit&& visit) {
  size_t m = s.ambient();
  IntVec lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    Rat mn = s.vertices()[0][i], mx = mn;
    for (const RatVec& v : s.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = -floor_rat(-(mn * t));  // ceil
    hi[i] = floor_rat(mx * t);
  }
  for (size_t i = 0; i < m; ++i)
    if (lo[i] > hi[i]) return;

  IntVec x = lo;
  while (true) {
    bool inside = true;
    for (const auto& r : s.predicate().residual_int)
      if (dot(r.coef, x) + r.constant * t != 0) {
        inside = false;
        break;
      }
    if (inside)
      for (const auto& b : s.predicate().bary_int)
        if (dot(b.coef, x) + b.constant * t < 0) {
          inside = false;
          break;
        }
    if (inside) visit(x);
    size_t i = m;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return;
    }
  }
}

}  // namespace

Int ehrhart_count(const Simplex& s, const Int& t) {
  if (t < 1) throw ValidationError("ehrhart_count: dilation must be >= 1");
  Int count = 0;
  scan_box(s, t, [&](const IntVec&) { ++count; });
  return count;
}

Int primitive_count_direct(const Simplex& s, const Int& t) {
  if (t < 1) throw ValidationError("primitive_count_direct: dilation must be >= 1");
  Int count = 0;
  scan_box(s, t, [&](const IntVec& x) {
    if (vec_gcd(x) == 1) ++count;
  });
  return count;
}

Int primitive_by_inversion(const Simplex& s, const Int& t) {
  if (t < 1) throw ValidationError("primitive_by_inversion: dilation must be >= 1");
  uint64_t tn = t.convert_to<uint64_t>();
  Int total = 0;
  for (uint64_t h : divisors(tn)) total += mobius(tn / h) * ehrhart_count(s, Int(h));
  return total;
}

}  // namespace unitstate
