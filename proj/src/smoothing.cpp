#include "knotinv/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

constexpr double kParallelTol = 1e-9;
constexpr int kMaxHalvingRounds = 64;

}  // namespace

NearestPointResult nearest_point_on_segment(const Vec3& q, const Vec3& a,
                                            const Vec3& b) {
  const Vec3 l = b - a;
  const Vec3 r = a - q;
  const double ll = norm2(l);
  const double lr = dot(l, r);
  NearestPointResult res;
  res.sigma_min = -lr / ll;
  if (res.sigma_min >= 1.0) {
    res.sigma = 1.0;
    res.point = b;
    res.distance = distance(b, q);
  } else if (res.sigma_min <= 0.0) {
    res.sigma = 0.0;
    res.point = a;
    res.distance = distance(a, q);
  } else {
    res.sigma = res.sigma_min;
    res.point = a + l * res.sigma;
    res.distance = std::sqrt(std::max(0.0, norm2(r) - lr * lr / ll));
  }
  return res;
}

NearestPointResult nearest_point_to_vertex(
    const DiscreteKnot& knot, std::size_t vertex,
    std::span<const std::size_t> excluded) {
  const std::size_t n = knot.size();
  const Vec3& q = knot.vertex(vertex);
  NearestPointResult best;
  best.distance = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(excluded.begin(), excluded.end(), k) != excluded.end()) {
      continue;
    }
    NearestPointResult r =
        nearest_point_on_segment(q, knot.vertex(k), knot.vertex(k + 1));
    if (!found || r.distance < best.distance) {
      best = r;
      best.segment = k;
      found = true;
    }
  }
  if (!found) throw DomainError("every segment is excluded");
  return best;
}

CornerPlan plan_corners(const DiscreteKnot& knot) {
  const std::size_t n = knot.size();
  const double tol = 1e-12 * knot.total_length();
  std::vector<Corner> plan(n);
  std::vector<bool> done(n, false);

  auto clearance = [&](std::size_t k, std::size_t c) {
    return distance(knot.vertex(k), knot.vertex(c)) - plan[k].d_in;
  };
  auto planned_smooth = [&](std::size_t k) {
    k %= n;
    return done[k] && plan[k].status == CornerStatus::kSmoothed;
  };
  auto min_clearance = [&](std::size_t c) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (planned_smooth(k)) m = std::min(m, clearance(k, c));
    }
    return m;
  };

  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t c = step % n;  // 1, 2, ..., N-1, then 0
    const std::size_t in = (c + n - 1) % n;
    const std::size_t out = c;
    Corner& corner = plan[c];
    if (segments_parallel(knot.segment(in), knot.segment(out), kParallelTol)) {
      corner.status = CornerStatus::kParallelSkip;
      done[c] = true;
      continue;
    }

    const std::size_t excluded[] = {in, out};
    const NearestPointResult near = nearest_point_to_vertex(knot, c, excluded);
    const double d_l = near.distance;
    double d_star = std::min(d_l, min_clearance(c));
    double value = d_l;

    // Shrinks every earlier sphere that touches p_c until there is room.
    auto halve_touching = [&]() {
      for (int round = 0; round < kMaxHalvingRounds; ++round) {
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (planned_smooth(k) && clearance(k, c) <= tol) {
            plan[k].d_in *= 0.5;
            plan[k].d_out *= 0.5;
            ++plan[k].halvings;
            any = true;
          }
        }
        if (!any) break;
      }
      d_star = std::min(d_l, min_clearance(c));
      if (!(d_star > tol)) {
        throw PlanningError("corner " + std::to_string(c) +
                            ": no positive radius after halving");
      }
      corner.rule = PlanRule::kCase3b;
      value = d_star;
    };

    if (d_star < d_l) {
      if (d_star > tol) {
        corner.rule = PlanRule::kCase3a;
        value = d_star;
      } else {
        halve_touching();
      }
    } else {
      const std::size_t l = near.segment;
      const double len = knot.segment_length(l);
      const double along = near.sigma * len;
      if (planned_smooth(l) && along < plan[l].d_out) {
        corner.rule = PlanRule::kCase2a;
        value = clearance(l, c);
      } else if (planned_smooth(l + 1) && len - along < plan[(l + 1) % n].d_in) {
        corner.rule = PlanRule::kCase2b;
        value = clearance((l + 1) % n, c);
      } else if (done[l] || done[(l + 1) % n]) {
        corner.rule = PlanRule::kCase2c;
      } else {
        corner.rule = PlanRule::kCase1;
      }
      if ((corner.rule == PlanRule::kCase2a ||
           corner.rule == PlanRule::kCase2b) && !(value > tol)) {
        halve_touching();
      }
      value = std::min(value, d_l);
    }

    const double d = std::min({value, 0.5 * knot.segment_length(in),
                               0.5 * knot.segment_length(out)});
    if (!(d > 0.0)) {
      throw PlanningError("corner " + std::to_string(c) +
                          ": degenerate radius");
    }
    corner.d_in = d;
    corner.d_out = d;
    corner.status = CornerStatus::kSmoothed;
    done[c] = true;
  }
  return CornerPlan(std::move(plan));
}

SmoothedKnot::SmoothedKnot(DiscreteKnot base, CornerPlan plan)
    : base_(std::move(base)), plan_(std::move(plan)) {
  const std::size_t n = base_.size();
  if (plan_.size() != n) {
    throw InputError("corner plan size does not match the knot");
  }
  constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
  constexpr double kQuarter = std::numbers::pi / 2.0;
  arcs_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!plan_.smoothed(c)) continue;
    const Corner& k = plan_[c];
    const std::size_t in = (c + n - 1) % n;
    const double l1 = base_.segment_length(in);
    const double l2 = base_.segment_length(c);
    if (!(k.d_in > 0.0 && k.d_in <= 0.5 * l1 * (1 + 1e-12) && k.d_out > 0.0 &&
          k.d_out <= 0.5 * l2 * (1 + 1e-12))) {
      throw InputError("corner " + std::to_string(c) +
                       ": radius outside (0, l/2]");
    }
    Arc& a = arcs_[c];
    a.apex = base_.vertex(c);
    a.lp = -base_.segment(in) * (k.d_in / l1);
    a.lm = base_.segment(c) * (k.d_out / l2);
    a.r = (k.d_in / l1) * (l2 / k.d_out);
    a.inv_d1 = 1.0 / (1.0 - kInvSqrt2 + kInvSqrt2 * a.r);
    a.inv_d2 = 1.0 / (1.0 - kInvSqrt2 + kInvSqrt2 / a.r);
    a.rate_in = l1 / (2.0 * k.d_in) * kQuarter;
    a.rate_out = l2 / (2.0 * k.d_out) * kQuarter;
    a.start_in = (l1 - k.d_in) / l1;
  }
}

// X+ on the incoming segment, theta from 0 to pi/4.
GeomSample SmoothedKnot::arc_in(const Arc& a, double f) const {
  const double th = a.rate_in * (f - a.start_in);
  const double s = std::sin(th);
  const double c = std::cos(th);
  GeomSample g;
  g.position = a.lp * (1.0 - a.r * s * a.inv_d1) + a.lm * ((1.0 - c) * a.inv_d2) +
               a.apex;
  g.derivative =
      (a.lp * (-a.r * c * a.inv_d1) + a.lm * (s * a.inv_d2)) * a.rate_in;
  return g;
}

// X- on the outgoing segment, theta from pi/4 to pi/2.
GeomSample SmoothedKnot::arc_out(const Arc& a, double f) const {
  const double th = std::numbers::pi / 4.0 + a.rate_out * f;
  const double s = std::sin(th);
  const double c = std::cos(th);
  GeomSample g;
  g.position = a.lp * ((1.0 - s) * a.inv_d1) +
               a.lm * (1.0 - c * a.inv_d2 / a.r) + a.apex;
  g.derivative =
      (a.lp * (-c * a.inv_d1) + a.lm * (s * a.inv_d2 / a.r)) * a.rate_out;
  return g;
}

std::pair<double, double> SmoothedKnot::zone_limits(std::size_t j) const {
  const std::size_t n = size();
  j %= n;
  const double len = base_.segment_length(j);
  const double lo = plan_.smoothed(j) ? plan_[j].d_out / len : 0.0;
  const double hi =
      plan_.smoothed(j + 1) ? (len - plan_[(j + 1) % n].d_in) / len : 1.0;
  return {lo, hi};
}

Zone SmoothedKnot::zone_of(std::size_t j, double f) const {
  const auto [lo, hi] = zone_limits(j);
  if (plan_.smoothed(j) && f < lo) return Zone::kArcOut;
  if (!plan_.smoothed(j + 1) || f < hi) return Zone::kStraight;
  return Zone::kArcIn;
}

GeomSample SmoothedKnot::sample_zone(std::size_t j, double f, Zone zone) const {
  const std::size_t n = size();
  j %= n;
  switch (zone) {
    case Zone::kArcOut:
      if (plan_.smoothed(j)) return arc_out(arcs_[j], f);
      break;
    case Zone::kArcIn:
      if (plan_.smoothed(j + 1)) return arc_in(arcs_[(j + 1) % n], f);
      break;
    case Zone::kStraight:
      break;
  }
  const Vec3 seg = base_.segment(j);
  return {base_.vertex(j) + seg * f, seg};
}

GeomSample SmoothedKnot::sample(double S) const {
  // S = N is the same point as S = 0; take the derivative from there too.
  if (S == static_cast<double>(size())) S = 0.0;
  const ParamPoint p = locate(base_, S);
  return sample_zone(p.segment, p.fraction, zone_of(p.segment, p.fraction));
}

namespace {

// Finds which replaced zone of corner c holds S, as (segment, fraction).
std::pair<ParamPoint, bool> corner_zone(const SmoothedKnot& sk, std::size_t c,
                                        double S) {
  const std::size_t n = sk.size();
  c %= n;
  if (!sk.plan().smoothed(c)) {
    throw DomainError("corner " + std::to_string(c) + " is not smoothed");
  }
  const double nd = static_cast<double>(n);
  if (!(S >= 0.0 && S <= nd)) throw DomainError("S outside [0, N]");
  const std::size_t in = (c + n - 1) % n;
  const double f_in = S - static_cast<double>(in);
  const double start = sk.zone_limits(in).second;
  if (f_in >= start && f_in <= 1.0) return {{in, f_in}, true};
  const double f_out = (c == 0 && S >= nd - 1.0) ? S - nd : S - static_cast<double>(c);
  const double end = sk.zone_limits(c).first;
  if (f_out >= 0.0 && f_out <= end) return {{c, f_out}, false};
  throw DomainError("S = " + std::to_string(S) +
                    " is outside the replaced zones of corner " +
                    std::to_string(c));
}

}  // namespace

Vec3 arc_point(const SmoothedKnot& sk, std::size_t corner, double S) {
  const auto [p, incoming] = corner_zone(sk, corner, S);
  const auto& arc = sk.arcs_[corner % sk.size()];
  return incoming ? sk.arc_in(arc, p.fraction).position
                  : sk.arc_out(arc, p.fraction).position;
}

Vec3 arc_tangent(const SmoothedKnot& sk, std::size_t corner, double S) {
  const auto [p, incoming] = corner_zone(sk, corner, S);
  const auto& arc = sk.arcs_[corner % sk.size()];
  return incoming ? sk.arc_in(arc, p.fraction).derivative
                  : sk.arc_out(arc, p.fraction).derivative;
}

SmoothedPoint sample_smoothed(const SmoothedKnot& sk, double S) {
  const GeomSample g = sk.sample(S);
  return {g.position, normalized(g.derivative)};
}

}  // namespace knotinv
