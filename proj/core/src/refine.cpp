#include "unitstate/refine.hpp"

#include <algorithm>
#include <map>

namespace unitstate {

IntVec canonical_form(const IntVec& f) { return normalize_primitive(f); }

namespace {

struct Cell {
  std::vector<RatVec> verts;
  size_t origin;
};

int sign(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

PolytopalComplex refine_by_hyperplanes(const PolytopalComplex& c, const std::vector<IntVec>& forms) {
  // Canonicalize and deduplicate the cutting forms.
  std::vector<IntVec> cuts_forms;
  for (const IntVec& f : forms) {
    if (f.size() != c.ambient()) throw ValidationError("refine_by_hyperplanes: form dimension mismatch");
    IntVec g = canonical_form(f);
    if (is_zero(g)) continue;
    cuts_forms.push_back(std::move(g));
  }
  std::sort(cuts_forms.begin(), cuts_forms.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  cuts_forms.erase(std::unique(cuts_forms.begin(), cuts_forms.end()), cuts_forms.end());

  std::vector<Cell> cells;
  for (size_t i = 0; i < c.size(); ++i) cells.push_back({c.cell(i).vertices(), c.origin()[i]});

  for (const IntVec& f : cuts_forms) {
    // Cut points of the current edges crossed strictly by {f = 0}. New
    // vertices introduced by pulling lie on the hyperplane, so no new
    // crossing edges can appear and this single sweep suffices.
    std::map<std::pair<RatVec, RatVec>, RatVec,
             decltype([](const std::pair<RatVec, RatVec>& x, const std::pair<RatVec, RatVec>& y) {
               if (x.first != y.first) return lex_less(x.first, y.first);
               return lex_less(x.second, y.second);
             })>
        cuts;
    for (const Cell& cell : cells) {
      for (size_t i = 0; i < cell.verts.size(); ++i) {
        for (size_t j = i + 1; j < cell.verts.size(); ++j) {
          const RatVec& a = cell.verts[i];
          const RatVec& b = cell.verts[j];
          Rat va = dot(f, a);
          Rat vb = dot(f, b);
          if (sign(va) * sign(vb) >= 0) continue;
          Rat s = va / (va - vb);
          RatVec x = vec_add(a, vec_scale(s, vec_sub(b, a)));
          auto key = lex_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
          cuts.emplace(std::move(key), std::move(x));
        }
      }
    }
    // Pull at each cut vertex: every cell containing both edge endpoints is
    // split in two. Processing order follows the map's lexicographic order.
    for (const auto& [edge, x] : cuts) {
      std::vector<Cell> next;
      next.reserve(cells.size() + 4);
      for (Cell& cell : cells) {
        auto ia = std::find(cell.verts.begin(), cell.verts.end(), edge.first);
        auto ib = std::find(cell.verts.begin(), cell.verts.end(), edge.second);
        if (ia == cell.verts.end() || ib == cell.verts.end()) {
          next.push_back(std::move(cell));
          continue;
        }
        Cell one{cell.verts, cell.origin};
        one.verts[static_cast<size_t>(ia - cell.verts.begin())] = x;
        Cell two{std::move(cell.verts), cell.origin};
        two.verts[static_cast<size_t>(ib - two.verts.begin())] = x;
        next.push_back(std::move(one));
        next.push_back(std::move(two));
      }
      cells = std::move(next);
    }
  }

  // Deterministic output order: pieces grouped by input cell, vertex-lex
  // within each group. A complex no form cuts comes back unchanged.
  for (Cell& cell : cells)
    std::sort(cell.verts.begin(), cell.verts.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.origin != b.origin) return a.origin < b.origin;
    if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
    for (size_t i = 0; i < a.verts.size(); ++i)
      if (a.verts[i] != b.verts[i]) return lex_less(a.verts[i], b.verts[i]);
    return false;
  });

  std::vector<Simplex> out;
  std::vector<size_t> origin;
  for (Cell& cell : cells) {
    out.emplace_back(std::move(cell.verts));
    origin.push_back(cell.origin);
  }
  return PolytopalComplex(c.ambient(), std::move(out), std::move(origin));
}

}  // namespace unitstate
