#pragma once

#include "unitstate/complex.hpp"

namespace unitstate {

// Normalize a linear form to its primitive representative with positive
// leading nonzero entry; zero forms stay zero.
IntVec canonical_form(const IntVec& f);

// Refine the complex by the hyperplanes {f = 0}. The result is a
// simplicial complex with the same underlying set in which every cell lies
// entirely in {f <= 0} or {f >= 0} for each input form. Subdivision is by
// pulling at the cut vertices of the original edges, processed in
// lexicographic order, so the output is deterministic and face-compatible.
PolytopalComplex refine_by_hyperplanes(const PolytopalComplex& c, const std::vector<IntVec>& forms);

}  // namespace unitstate
