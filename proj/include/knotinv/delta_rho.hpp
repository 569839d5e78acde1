#pragma once

#include <cstddef>
#include <cstdint>

#include "knotinv/mc_engine.hpp"
#include "knotinv/smoothing.hpp"

namespace knotinv {

// Two knots with the same vertex count that agree outside the cyclic block of
// segments [begin, begin + count).
struct Deformation {
  DiscreteKnot reference;
  DiscreteKnot transformed;
  std::size_t begin = 0;
  std::size_t count = 0;
};

// Finds the changed block by common prefix/suffix of the vertex lists. When
// the vertex counts differ, the shorter block is padded by splitting its
// longest segments at their midpoints (collinear joints, left unsmoothed).
Deformation make_deformation(const DiscreteKnot& reference,
                             const DiscreteKnot& transformed);

// Volume of the ordered m-simplex of side N minus that of side N - K:
// (N^m - (N-K)^m) / m!. Exact in integer arithmetic for m = 3, 4.
double s_k(std::int64_t n, std::int64_t k, int m = 4);

enum class Verdict { kSameClass, kChanged, kInconclusive };

const char* to_string(Verdict v);

// SAME_CLASS if |mean| + 3 se < 1, CHANGED if |mean| - 3 se > 1.
Verdict classify(const MCEstimate& e);

struct DeltaEstimate {
  MCEstimate delta;   // rho(transformed) - rho(reference)
  MCEstimate delta1;  // triple-integral part
  MCEstimate delta2;  // quadruple-integral part
  std::size_t range_begin = 0;
  std::size_t range_count = 0;  // K actually sampled
  bool strata = false;          // union-of-strata sampler (K/N < 0.1)
  Verdict verdict = Verdict::kInconclusive;
};

// Constant integrand pushed through the restricted sampler (rejection, or
// strata when strata is set): estimates the measure of ordered m-tuples in
// [0, n] with a coordinate in the cyclic range [begin, begin + count), which
// should equal s_k(n, count, m).
MCEstimate restricted_measure(std::size_t n, std::size_t begin,
                              std::size_t count, int m, bool strata,
                              const SamplerConfig& cfg);

// Samples only ordered tuples with at least one coordinate in the changed
// parameter range and evaluates both smoothed knots on each tuple (common
// random numbers). The range is widened to cover every segment whose smoothed
// geometry differs between the two knots.
DeltaEstimate delta_rho(const Deformation& def, const SamplerConfig& cfg);

}  // namespace knotinv
