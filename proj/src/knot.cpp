#include "knotinv/knot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

bool axis_aligned(const Vec3& v, double len) {
  const double tol = 1e-9 * len;
  int nonzero = 0;
  for (double c : {v.x, v.y, v.z}) {
    if (std::abs(c) > tol) ++nonzero;
  }
  return nonzero == 1;
}

}  // namespace

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0,
                        const Vec3& q1) {
  // Closest points of two segments (Ericson, Real-Time Collision Detection).
  const Vec3 d1 = p1 - p0;
  const Vec3 d2 = q1 - q0;
  const Vec3 r = p0 - q0;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  double s = 0.0;
  double t = 0.0;
  if (a <= 0.0 && e <= 0.0) return norm(r);
  if (a <= 0.0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= 0.0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return distance(p0 + d1 * s, q0 + d2 * t);
}

bool segments_parallel(const Vec3& a, const Vec3& b, double tol) {
  return dot(a, b) / (norm(a) * norm(b)) > 1.0 - tol;
}

DiscreteKnot::DiscreteKnot(std::vector<Vec3> vertices, std::string name)
    : vertices_(std::move(vertices)), name_(std::move(name)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw InputError("a knot needs at least 3 vertices, got " +
                     std::to_string(n));
  }
  lengths_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    lengths_[j] = norm(segment(j));
    if (!(lengths_[j] > 0.0) || !std::isfinite(lengths_[j])) {
      throw InputError("zero-length segment at index " + std::to_string(j));
    }
    total_length_ += lengths_[j];
  }
  min_length_ = *std::min_element(lengths_.begin(), lengths_.end());

  // Consecutive segments may only share their common vertex.
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3 a = segment(j);
    const Vec3 b = segment(j + 1);
    if (dot(a, b) / (lengths_[j] * lengths_[(j + 1) % n]) < -1.0 + 1e-12) {
      throw InputError("segments " + std::to_string(j) + " and " +
                       std::to_string((j + 1) % n) + " fold back on each other");
    }
  }
  const double tol = 1e-12 * total_length_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const double d = segment_distance(vertex(i), vertex(i + 1), vertex(j),
                                        vertex(j + 1));
      if (d <= tol) {
        std::ostringstream msg;
        msg << "segments " << i << " and " << j << " intersect (distance " << d
            << ")";
        throw InputError(msg.str());
      }
    }
  }

  is_lattice_ = true;
  for (std::size_t j = 0; j < n && is_lattice_; ++j) {
    is_lattice_ = axis_aligned(segment(j), lengths_[j]) &&
                  std::abs(lengths_[j] - lengths_[0]) <= 1e-9 * lengths_[0];
  }
}

ParamPoint locate(const DiscreteKnot& knot, double S) {
  const double n = static_cast<double>(knot.size());
  if (!(S >= 0.0 && S <= n)) {
    std::ostringstream msg;
    msg << "curve parameter " << S << " outside [0, " << knot.size() << "]";
    throw DomainError(msg.str());
  }
  if (S == n) return {knot.size() - 1, 1.0};
  const double base = std::floor(S);
  return {static_cast<std::size_t>(base), S - base};
}

Vec3 point_at(const DiscreteKnot& knot, double S) {
  const ParamPoint p = locate(knot, S);
  return knot.vertex(p.segment) + knot.segment(p.segment) * p.fraction;
}

Vec3 tangent_at(const DiscreteKnot& knot, double S) {
  const ParamPoint p = locate(knot, S);
  if (p.fraction == 1.0) return knot.segment(0);
  return knot.segment(p.segment);
}

Vec3 centroid(const DiscreteKnot& knot) {
  Vec3 c;
  for (const Vec3& v : knot.vertices()) c += v;
  return c / static_cast<double>(knot.size());
}

DiscreteKnot rescale(const DiscreteKnot& knot, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("rescale factor must be positive");
  }
  if (eta == 1.0) return knot;
  const Vec3 c = centroid(knot);
  std::vector<Vec3> v;
  v.reserve(knot.size());
  for (const Vec3& p : knot.vertices()) v.push_back(c + (p - c) * eta);
  return DiscreteKnot(std::move(v), knot.name());
}

}  // namespace knotinv
