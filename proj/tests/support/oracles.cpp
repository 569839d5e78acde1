#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "knotinv/errors.hpp"
#include "knotinv/generators.hpp"
#include "support/lattice_walk.hpp"

namespace knotinv::testing {

namespace {

using ld = long double;

LVec sub(const LVec& a, const LVec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
LVec add(const LVec& a, const LVec& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
LVec mul(const LVec& a, ld s) { return {a[0] * s, a[1] * s, a[2] * s}; }
ld dot(const LVec& a, const LVec& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
LVec cross(const LVec& a, const LVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
ld len(const LVec& a) { return std::sqrt(dot(a, a)); }

double dist(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Vec3 unit(const Vec3& v) {
  const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  return {v.x / n, v.y / n, v.z / n};
}

}  // namespace

Vec3 interpolate(std::span<const Vec3> v, double S) {
  const std::size_t n = v.size();
  double whole = std::floor(S);
  if (whole >= static_cast<double>(n)) whole = static_cast<double>(n) - 1.0;
  const double t = S - whole;
  const std::size_t i = static_cast<std::size_t>(whole);
  const Vec3& a = v[i];
  const Vec3& b = v[(i + 1) % n];
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

long double f1_reference(const LVec& x, const LVec& y, const LVec& z,
                         const LVec& dx, const LVec& dy, const LVec& dz) {
  const LVec av = sub(y, x), bv = sub(z, x), cv = sub(y, z);
  const ld a = len(av), b = len(bv), c = len(cv);
  const ld pi = std::numbers::pi_v<ld>;
  const ld C1 = 2 * pi / (a * b * c);
  const ld C2 = 1 / (a * b + dot(av, bv));
  const ld C3 = a + b - c;
  const ld g1 = dot(dy, dz) * dot(dx, cv) + dot(dx, dz) * dot(dy, bv) -
                dot(dx, dy) * dot(dz, av);
  const LVec axb = cross(av, bv);
  const LVec zx = cross(dz, dx), yx = cross(dy, dx);
  const LVec u2 = add(av, mul(bv, a / b));
  const LVec v2 = add(bv, mul(av, b / a));
  const ld g2 = dot(dy, axb) * dot(u2, zx) + dot(dz, axb) * dot(v2, yx);
  const LVec u3 = add(mul(bv, (c - a) / (b * b)), mul(cv, (a + b) / (c * c)));
  const LVec v3 = sub(mul(av, (c - b) / (a * a)), mul(cv, (a + b) / (c * c)));
  const ld g3 = dot(dy, axb) * dot(u3, zx) + dot(dz, axb) * dot(v3, yx);
  const ld bracket = C1 * C2 * C3 * g1 - C1 * C2 * C2 * C3 * g2 + C1 * C2 * g3;
  return -bracket / (32 * pi * pi * pi);
}

long double f2_reference(const LVec& x, const LVec& y, const LVec& z,
                         const LVec& w, const LVec& dx, const LVec& dy,
                         const LVec& dz, const LVec& dw) {
  const LVec bv = sub(z, x), ev = sub(w, y);
  const ld b = len(bv), e = len(ev);
  const ld pi = std::numbers::pi_v<ld>;
  return dot(dx, cross(dz, bv)) / (b * b * b) * dot(dy, cross(dw, ev)) /
         (e * e * e) / (8 * pi * pi);
}

double scan_nearest_distance(const DiscreteKnot& knot, std::size_t vertex,
                             std::span<const std::size_t> excluded,
                             int samples) {
  const Vec3& q = knot.vertex(vertex);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < knot.size(); ++k) {
    if (std::find(excluded.begin(), excluded.end(), k) != excluded.end()) {
      continue;
    }
    const Vec3& a = knot.vertex(k);
    const Vec3& b = knot.vertex(k + 1);
    auto at = [&](double t) {
      return dist(q, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y),
                      a.z + t * (b.z - a.z)});
    };
    int arg = 0;
    double low = at(0.0);
    for (int s = 1; s < samples; ++s) {
      const double d = at(static_cast<double>(s) / (samples - 1));
      if (d < low) {
        low = d;
        arg = s;
      }
    }
    // distance along a segment is convex, so golden section on the
    // bracketing cells converges to the true minimum
    double lo = std::max(0, arg - 1) / static_cast<double>(samples - 1);
    double hi = std::min(samples - 1, arg + 1) / static_cast<double>(samples - 1);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
      const double m1 = hi - g * (hi - lo);
      const double m2 = lo + g * (hi - lo);
      if (at(m1) < at(m2)) hi = m2; else lo = m1;
    }
    best = std::min({best, low, at(0.5 * (lo + hi))});
  }
  return best;
}

SmoothingAudit audit_smoothing(const SmoothedKnot& sk, int per_segment) {
  SmoothingAudit out;
  const std::size_t n = sk.size();
  const DiscreteKnot& k = sk.base();
  const CornerPlan& plan = sk.plan();

  auto jump = [](const GeomSample& a, const GeomSample& b) {
    const Vec3 ua = unit(a.derivative), ub = unit(b.derivative);
    return dist(ua, ub);
  };
  auto gap = [](const GeomSample& a, const GeomSample& b) {
    return dist(a.position, b.position);
  };

  for (std::size_t j = 0; j < n; ++j) {
    const auto [lo, hi] = sk.zone_limits(j);
    const Zone first = plan.smoothed(j) ? Zone::kArcOut : Zone::kStraight;
    const Zone last = plan.smoothed(j + 1) ? Zone::kArcIn : Zone::kStraight;
    if (plan.smoothed(j) && lo < hi) {
      const auto a = sk.sample_zone(j, lo, Zone::kArcOut);
      const auto b = sk.sample_zone(j, lo, Zone::kStraight);
      out.max_tangent_jump = std::max({out.max_tangent_jump, jump(a, b), gap(a, b)});
    }
    if (plan.smoothed(j + 1) && lo < hi) {
      const auto a = sk.sample_zone(j, hi, Zone::kStraight);
      const auto b = sk.sample_zone(j, hi, Zone::kArcIn);
      out.max_tangent_jump = std::max({out.max_tangent_jump, jump(a, b), gap(a, b)});
    }
    if (lo >= hi && plan.smoothed(j) && plan.smoothed(j + 1)) {
      const auto a = sk.sample_zone(j, lo, Zone::kArcOut);
      const auto b = sk.sample_zone(j, lo, Zone::kArcIn);
      out.max_tangent_jump = std::max({out.max_tangent_jump, jump(a, b), gap(a, b)});
    }
    // joint between segment j and j+1: the weld of corner j+1, or a straight
    // collinear joint
    const auto a = sk.sample_zone(j, 1.0, last);
    const auto b = sk.sample_zone(j + 1, 0.0,
                                  plan.smoothed(j + 1) ? Zone::kArcOut
                                                       : Zone::kStraight);
    if (plan.smoothed(j + 1) ||
        plan[j + 1].status == CornerStatus::kParallelSkip) {
      out.max_tangent_jump = std::max(out.max_tangent_jump, gap(a, b));
      if (plan.smoothed(j + 1) || segments_parallel(k.segment(j), k.segment(j + 1))) {
        out.max_tangent_jump = std::max(out.max_tangent_jump, jump(a, b));
      }
    }
    (void)first;
  }

  std::vector<std::size_t> smoothed;
  for (std::size_t c = 0; c < n; ++c) {
    if (plan.smoothed(c)) smoothed.push_back(c);
  }
  out.smoothed = smoothed.size();
  for (std::size_t i = 0; i < smoothed.size(); ++i) {
    for (std::size_t j = i + 1; j < smoothed.size(); ++j) {
      const std::size_t a = smoothed[i], b = smoothed[j];
      const double over =
          plan.radius(a) + plan.radius(b) - dist(k.vertex(a), k.vertex(b));
      out.max_overlap = std::max(out.max_overlap, over);
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (int s = 0; s <= per_segment; ++s) {
      const double f = static_cast<double>(s) / per_segment;
      const Zone z = sk.zone_of(j, f);
      const Vec3 p = sk.sample_zone(j, f, z).position;
      ++out.points;
      // owner corner of this point, if it sits on an arc
      std::size_t owner = n;
      if (z == Zone::kArcOut) owner = j;
      if (z == Zone::kArcIn) owner = (j + 1) % n;
      if (owner != n) {
        const double excess = dist(p, k.vertex(owner)) - plan.radius(owner);
        out.max_containment_excess = std::max(out.max_containment_excess, excess);
      }
      for (std::size_t c : smoothed) {
        if (c == owner) continue;
        // the straight part of an adjacent segment ends on the sphere
        const bool adjacent = (c == j) || (c == (j + 1) % n);
        if (adjacent && z == Zone::kStraight) {
          const double d = dist(p, k.vertex(c));
          out.max_intrusion = std::max(out.max_intrusion, plan.radius(c) - d - 1e-12);
          continue;
        }
        const double d = dist(p, k.vertex(c));
        out.max_intrusion = std::max(out.max_intrusion, plan.radius(c) - d);
      }
    }
  }
  return out;
}

DiscreteKnot jitter(const DiscreteKnot& knot, double amp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vec3> v(knot.vertices().begin(), knot.vertices().end());
    for (Vec3& p : v) {
      p.x += u(rng);
      p.y += u(rng);
      p.z += u(rng);
    }
    try {
      return DiscreteKnot(std::move(v), knot.name() + "~");
    } catch (const InputError&) {
    }
  }
  throw InputError("jitter failed");
}

std::vector<CorpusKnot> smoothing_corpus() {
  std::vector<CorpusKnot> out;
  const DiscreteKnot square = lattice_square();
  const DiscreteKnot trefoil = shipped_lattice_knot("3_1");
  for (std::uint64_t s = 1; s <= 4; ++s) {
    out.push_back({"grown unknot " + std::to_string(s),
                   grow_lattice_knot(square, 20 + 12 * s, s, 200)});
  }
  for (std::uint64_t s = 1; s <= 4; ++s) {
    out.push_back({"grown trefoil " + std::to_string(s),
                   grow_lattice_knot(trefoil, 30 + 10 * s, 100 + s, 200)});
  }
  for (const std::string& t : shipped_lattice_types()) {
    out.push_back({"shipped " + t, shipped_lattice_knot(t)});
  }
  out.push_back({"square", square});
  out.push_back({"circle 64", polygon_circle(64)});
  out.push_back({"circle 7", polygon_circle(7, 2.5)});
  out.push_back({"torus 2,3 M=8", torus_knot(2, 3, 8, 3.0, 1.0)});
  out.push_back({"torus 2,3 M=30", torus_knot(2, 3, 30)});
  out.push_back({"torus 2,5 M=40", torus_knot(2, 5, 40)});
  out.push_back({"torus 3,4 M=60", torus_knot(3, 4, 60, 3.0, 1.0)});
  for (std::uint64_t s = 1; s <= 4; ++s) {
    const DiscreteKnot base = s % 2 ? trefoil : shipped_lattice_knot("4_1");
    out.push_back({"jittered " + std::to_string(s), jitter(base, 0.15, s)});
  }
  return out;
}

}  // namespace knotinv::testing
