#pragma once

#include <span>

#include "knotinv/smoothing.hpp"

namespace knotinv {

// Positions and un-normalized tangents of the trajectory copies X, Y, Z and,
// for the quadruple integral, W.
struct GeomTriple {
  GeomSample x;
  GeomSample y;
  GeomSample z;
  GeomSample w;
};

enum class NormalRule {
  kDiagonal,       // constant (1,1,1)/sqrt(3)
  kTangentNormal,  // unit vector perpendicular to the local tangent
};

// Copy k (k = 0..3 for X, Y, Z, W) is shifted by (k+1) * epsilon * n.
// epsilon == 0 switches framing off.
struct Framing {
  double epsilon = 0.0;
  NormalRule rule = NormalRule::kDiagonal;

  // Default epsilon: 1e-4 of the shortest segment.
  static Framing standard(const DiscreteKnot& knot);

  // ConfigError unless 0 <= epsilon < 0.1 * min segment length.
  void validate(const DiscreteKnot& knot) const;
};

Vec3 framing_normal(NormalRule rule, const Vec3& tangent);

// Shifts copies[k] by (k+1) * epsilon along the normal field.
void apply_framing(std::span<GeomSample> copies, const Framing& framing);

inline GeomSample shifted(GeomSample s, const Framing& framing, int copy) {
  if (framing.epsilon != 0.0) {
    s.position += framing_normal(framing.rule, s.derivative) *
                  (framing.epsilon * (copy + 1));
  }
  return s;
}

// Integrand of the triple integral. Non-finite when two of x, y, z coincide.
double f1(const GeomTriple& t);

// Integrand of the quadruple integral: the product of two Gauss kernels on the
// crossing chords (x, z) and (y, w).
double f2(const GeomTriple& t);

}  // namespace knotinv
