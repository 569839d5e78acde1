#pragma once

#include <cstddef>
#include <cstdint>

#include "knotinv/knot.hpp"

namespace knotinv::testing {

// Grows a unit-step lattice polygon to target_n segments with BFACF moves
// (+2 detours, corner flips, -2 retractions), all self-avoiding, so the knot
// type of the start polygon is kept. Then runs `flips` extra corner flips.
DiscreteKnot grow_lattice_knot(const DiscreteKnot& start, std::size_t target_n,
                               std::uint64_t seed, std::size_t flips = 0);

// Replaces unit edge j by a rectangular detour of the given depth along the
// axis direction dir (0..5 = +x,-x,+y,-y,+z,-z), in unit steps. Throws
// InputError if the result is not self-avoiding. Depth 1 is a BFACF +2 move.
DiscreteKnot add_detour(const DiscreteKnot& knot, std::size_t j, int dir,
                        int depth);

}  // namespace knotinv::testing
