#pragma once

// Independent reference code for the tests. Nothing here calls the library
// routine it is meant to check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "knotinv/knot.hpp"
#include "knotinv/smoothing.hpp"

namespace knotinv::testing {

using LVec = std::array<long double, 3>;

// Straight-line interpolation along the vertex list, written without the
// library's segment lookup.
Vec3 interpolate(std::span<const Vec3> vertices, double S);

// F1 and F2 in long double, straight from the textbook form (plain C2, no
// cancellation-safe rewrite).
long double f1_reference(const LVec& x, const LVec& y, const LVec& z,
                         const LVec& dx, const LVec& dy, const LVec& dz);
long double f2_reference(const LVec& x, const LVec& y, const LVec& z,
                         const LVec& w, const LVec& dx, const LVec& dy,
                         const LVec& dz, const LVec& dw);

// Nearest point to vertex p_k found by scanning every allowed segment on a
// grid of `samples` points, then refining by golden section.
double scan_nearest_distance(const DiscreteKnot& knot, std::size_t vertex,
                             std::span<const std::size_t> excluded,
                             int samples = 20001);

struct SmoothingAudit {
  double max_tangent_jump = 0.0;     // unit tangent mismatch at boundaries
  double max_containment_excess = 0.0;  // arc point beyond its sphere
  double max_overlap = 0.0;          // d_i + d_j - |p_i - p_j| if positive
  double max_intrusion = 0.0;        // foreign point inside a sphere
  std::size_t smoothed = 0;
  std::size_t points = 0;
};

// Dense brute-force check of a smoothed knot: tangent continuity at every
// zone boundary and joint, arcs inside their spheres, spheres disjoint, no
// foreign curve point inside any sphere.
SmoothingAudit audit_smoothing(const SmoothedKnot& sk, int per_segment = 200);

struct CorpusKnot {
  std::string label;
  DiscreteKnot knot;
};

// At least 20 knots: grown lattice knots of several types and sizes, plus
// off-lattice torus knots, circles and jittered lattice knots.
std::vector<CorpusKnot> smoothing_corpus();

// Moves each vertex by a uniform offset of at most amp in each coordinate;
// retries with new offsets until the polygon is valid.
DiscreteKnot jitter(const DiscreteKnot& knot, double amp, std::uint64_t seed);

}  // namespace knotinv::testing
