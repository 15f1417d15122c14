#pragma once

#include "toric/numeric.hpp"

#include <optional>
#include <vector>

namespace toric {

// Exact rational linear programming, adequate for the small systems that
// arise from cones and height functions.

// Is target a non-negative rational combination of the given rays?
bool in_nonneg_span(const std::vector<IVec> &rays, const IVec &target);

// Feasibility of { x free : a x >= rhs, and max eps subject to
// a x - eps * active >= rhs }. Used for strict systems: returns true iff
// there is x with a_i x > rhs_i for every row flagged strict (non-strict
// rows must hold weakly).
struct StrictSystem {
    std::vector<RVec> rows;
    RVec rhs;
    std::vector<bool> strict;
};
bool strictly_feasible(const StrictSystem &sys);

} // namespace toric
