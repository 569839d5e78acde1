#include "knotinv/integrand.hpp"

#include <cmath>
#include <numbers>

#include "knotinv/errors.hpp"

namespace knotinv {

Framing Framing::standard(const DiscreteKnot& knot) {
  return {1e-4 * knot.min_segment_length(), NormalRule::kDiagonal};
}

void Framing::validate(const DiscreteKnot& knot) const {
  if (!(epsilon >= 0.0) || !(epsilon < 0.1 * knot.min_segment_length())) {
    throw ConfigError("framing epsilon must lie in [0, 0.1 * min segment "
                      "length)");
  }
}

Vec3 framing_normal(NormalRule rule, const Vec3& tangent) {
  static const Vec3 kDiag = normalized(Vec3{1.0, 1.0, 1.0});
  if (rule == NormalRule::kDiagonal) return kDiag;
  // Cross with the coordinate axis least aligned with the tangent.
  const double ax = std::abs(tangent.x);
  const double ay = std::abs(tangent.y);
  const double az = std::abs(tangent.z);
  Vec3 axis{0.0, 0.0, 1.0};
  if (ax <= ay && ax <= az) {
    axis = {1.0, 0.0, 0.0};
  } else if (ay <= az) {
    axis = {0.0, 1.0, 0.0};
  }
  return normalized(cross(tangent, axis));
}

void apply_framing(std::span<GeomSample> copies, const Framing& framing) {
  for (std::size_t k = 0; k < copies.size(); ++k) {
    copies[k] = shifted(copies[k], framing, static_cast<int>(k));
  }
}

double f1(const GeomTriple& t) {
  const Vec3& xd = t.x.derivative;
  const Vec3& yd = t.y.derivative;
  const Vec3& zd = t.z.derivative;
  const Vec3 a = t.y.position - t.x.position;
  const Vec3 b = t.z.position - t.x.position;
  const Vec3 c = t.y.position - t.z.position;
  const double na = norm(a);
  const double nb = norm(b);
  const double nc = norm(c);
  const Vec3 axb = cross(a, b);
  const double ab = dot(a, b);

  const double c1 = 2.0 * std::numbers::pi / (na * nb * nc);
  // 1 / (ab + a.b), rewritten when a.b < 0 to avoid cancellation.
  const double c2 =
      ab >= 0.0 ? 1.0 / (na * nb + ab) : (na * nb - ab) / norm2(axb);
  const double c3 = na + nb - nc;

  const Vec3 zx = cross(zd, xd);
  const Vec3 yx = cross(yd, xd);
  const double y_axb = dot(yd, axb);
  const double z_axb = dot(zd, axb);

  const double g1 = dot(yd, zd) * dot(xd, c) + dot(xd, zd) * dot(yd, b) -
                    dot(xd, yd) * dot(zd, a);
  const double g2 = y_axb * dot(a + b * (na / nb), zx) +
                    z_axb * dot(b + a * (nb / na), yx);
  const double s = (na + nb) / (nc * nc);
  const double g3 =
      y_axb * dot(b * ((nc - na) / (nb * nb)) + c * s, zx) +
      z_axb * dot(a * ((nc - nb) / (na * na)) - c * s, yx);

  const double total = c1 * c2 * c3 * g1 - c1 * c2 * c2 * c3 * g2 + c1 * c2 * g3;
  return -total / (32.0 * std::numbers::pi * std::numbers::pi *
                   std::numbers::pi);
}

double f2(const GeomTriple& t) {
  const Vec3 b = t.z.position - t.x.position;
  const Vec3 e = t.w.position - t.y.position;
  const double nb = norm(b);
  const double ne = norm(e);
  const double k1 = triple(t.x.derivative, t.z.derivative, b) / (nb * nb * nb);
  const double k2 = triple(t.y.derivative, t.w.derivative, e) / (ne * ne * ne);
  return k1 * k2 / (8.0 * std::numbers::pi * std::numbers::pi);
}

}  // namespace knotinv
