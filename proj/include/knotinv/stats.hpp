#pragma once

#include <cmath>
#include <cstdint>

namespace knotinv {

// Streaming mean/variance with a count of rejected (non-finite) samples.
struct Welford {
  std::uint64_t count = 0;
  std::uint64_t flagged = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    if (!std::isfinite(v)) {
      ++flagged;
      return;
    }
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }

  // Pairwise mean/M2 combination. Not commutative in floating point, so
  // callers merge in a fixed order.
  void merge(const Welford& o) {
    flagged += o.flagged;
    if (o.count == 0) return;
    if (count == 0) {
      count = o.count;
      mean = o.mean;
      m2 = o.m2;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double delta = o.mean - mean;
    mean += delta * (nb / n);
    m2 += o.m2 + delta * delta * (na * nb / n);
    count += o.count;
  }

  double variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
  double std_error() const {
    return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
  }
};

}  // namespace knotinv
