#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knotinv/knot.hpp"

namespace knotinv {

enum class CornerStatus { kSmoothed, kParallelSkip };

// Which radius-selection rule fixed a corner.
enum class PlanRule {
  kNone,    // parallel skip
  kCase1,   // nearest point on an untouched segment
  kCase2a,  // nearest point inside the replaced start zone of its segment
  kCase2b,  // nearest point inside the replaced end zone of its segment
  kCase2c,  // nearest point on the straight middle of a touched segment
  kCase3a,  // an earlier sphere is closer than the nearest segment
  kCase3b,  // the vertex sits on an earlier sphere; that sphere was halved
};

// Corner k sits at vertex p_k between the incoming segment k-1 and the
// outgoing segment k. d_in is the replaced length on the incoming segment,
// d_out on the outgoing one; the arc lives in the sphere of radius d_in
// around p_k. Smoothed corners always have d_in == d_out.
struct Corner {
  double d_in = 0.0;
  double d_out = 0.0;
  CornerStatus status = CornerStatus::kParallelSkip;
  PlanRule rule = PlanRule::kNone;
  int halvings = 0;  // times a later corner shrank this sphere
};

class CornerPlan {
 public:
  CornerPlan() = default;
  explicit CornerPlan(std::vector<Corner> corners)
      : corners_(std::move(corners)) {}

  // Every corner left sharp; sampling then reproduces the raw polygon.
  static CornerPlan unsmoothed(std::size_t n) {
    return CornerPlan(std::vector<Corner>(n));
  }

  std::size_t size() const { return corners_.size(); }
  const Corner& operator[](std::size_t k) const {
    return corners_[k % corners_.size()];
  }
  bool smoothed(std::size_t k) const {
    return (*this)[k].status == CornerStatus::kSmoothed;
  }
  double radius(std::size_t k) const { return (*this)[k].d_in; }
  std::span<const Corner> corners() const { return corners_; }

 private:
  std::vector<Corner> corners_;
};

struct NearestPointResult {
  Vec3 point;
  double distance = 0.0;
  std::size_t segment = 0;
  double sigma_min = 0.0;  // unclamped foot parameter
  double sigma = 0.0;      // clamped to [0, 1]
};

// Nearest point of segment [a, b] to q. The segment field is left at 0.
NearestPointResult nearest_point_on_segment(const Vec3& q, const Vec3& a,
                                            const Vec3& b);

// Nearest point to vertex p_k over all segments not listed in excluded.
// Throws DomainError if every segment is excluded.
NearestPointResult nearest_point_to_vertex(
    const DiscreteKnot& knot, std::size_t vertex,
    std::span<const std::size_t> excluded);

// Sphere radii for every corner, chosen in the order p_1, ..., p_{N-1}, p_0
// so that spheres of smoothed corners meet at most in a boundary point and
// contain no foreign part of the curve.
CornerPlan plan_corners(const DiscreteKnot& knot);

// Position and dX/dS. The derivative is not normalized: on straight parts it
// is the segment vector, on arcs the analytic derivative of the arc ansatz.
struct GeomSample {
  Vec3 position;
  Vec3 derivative;
};

enum class Zone {
  kArcOut,    // start of a segment, replaced by the arc of its start corner
  kStraight,  // untouched middle
  kArcIn,     // end of a segment, replaced by the arc of its end corner
};

class SmoothedKnot {
 public:
  SmoothedKnot(DiscreteKnot base, CornerPlan plan);

  static SmoothedKnot smooth(const DiscreteKnot& knot) {
    return SmoothedKnot(knot, plan_corners(knot));
  }
  static SmoothedKnot unsmoothed(const DiscreteKnot& knot) {
    return SmoothedKnot(knot, CornerPlan::unsmoothed(knot.size()));
  }

  const DiscreteKnot& base() const { return base_; }
  const CornerPlan& plan() const { return plan_; }
  std::size_t size() const { return base_.size(); }

  // Zone owning fraction f of segment j; zones are [0, a), [a, b), [b, 1].
  Zone zone_of(std::size_t segment, double fraction) const;

  GeomSample sample(double S) const;

  // Evaluates one zone's formula at fraction f of segment j, including the
  // closed end points of the zone. Used to compare one-sided limits.
  GeomSample sample_zone(std::size_t segment, double fraction, Zone zone) const;

  // Zone boundaries on segment j as fractions {a, b}.
  std::pair<double, double> zone_limits(std::size_t segment) const;

 private:
  struct Arc {
    Vec3 apex;
    Vec3 lp;  // replaced part of the incoming segment, pointing back
    Vec3 lm;  // replaced part of the outgoing segment, pointing forward
    double r = 1.0;
    double inv_d1 = 1.0;
    double inv_d2 = 1.0;
    double rate_in = 0.0;
    double rate_out = 0.0;
    double start_in = 1.0;  // fraction where the incoming arc begins
  };

  GeomSample arc_in(const Arc& arc, double fraction) const;
  GeomSample arc_out(const Arc& arc, double fraction) const;

  DiscreteKnot base_;
  CornerPlan plan_;
  std::vector<Arc> arcs_;

  friend Vec3 arc_point(const SmoothedKnot&, std::size_t, double);
  friend Vec3 arc_tangent(const SmoothedKnot&, std::size_t, double);
};

// Arc of corner k evaluated at curve parameter S, which must lie in one of
// the two replaced zones of that corner; DomainError otherwise.
Vec3 arc_point(const SmoothedKnot& sk, std::size_t corner, double S);
Vec3 arc_tangent(const SmoothedKnot& sk, std::size_t corner, double S);

struct SmoothedPoint {
  Vec3 position;
  Vec3 unit_tangent;
};

SmoothedPoint sample_smoothed(const SmoothedKnot& sk, double S);

}  // namespace knotinv
