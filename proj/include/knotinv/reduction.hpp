#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "knotinv/knot.hpp"

namespace knotinv {

struct ReductionReport {
  std::size_t n_before = 0;
  std::size_t n_after = 0;
  std::size_t merged = 0;         // vertices removed by merge_parallel
  std::size_t tadpoles = 0;
  std::size_t two_segment = 0;
  std::size_t three_segment = 0;
  std::size_t rejected = 0;       // matches refused by the sweep check
  int passes = 0;
};

struct ReductionOptions {
  // Lattice unit used by the tadpole rule. Unset: the shortest axis-aligned
  // segment of the input.
  std::optional<double> unit;
  // Rewrites never take the polygon below this many segments.
  std::size_t min_segments = 4;
};

// Collapses maximal runs of contiguous same-direction collinear segments.
DiscreteKnot merge_parallel(const DiscreteKnot& knot,
                            std::size_t* removed = nullptr);

// Replaces U-shaped detours a -> a+d -> a+d+e -> a+e (|e| one lattice unit)
// by the segment a -> a+e when the swept rectangle is empty.
DiscreteKnot reduce_tadpole(const DiscreteKnot& knot,
                            const ReductionOptions& opts = {},
                            std::size_t* applied = nullptr);

// Fixed point of: merge_parallel, tadpoles, three-segment chords (axis
// patterns x,y,z and x,y,x), two-segment chords (perpendicular axis pair).
// Every chord replacement must sweep a region no other segment touches. The
// result is in general off lattice.
std::pair<DiscreteKnot, ReductionReport> reduce_lattice(
    const DiscreteKnot& knot, const ReductionOptions& opts = {});

// Distance between segment [p0, p1] and the filled triangle (a, b, c).
double segment_triangle_distance(const Vec3& p0, const Vec3& p1, const Vec3& a,
                                 const Vec3& b, const Vec3& c);

}  // namespace knotinv
