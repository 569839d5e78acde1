#include "knotinv/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace knotinv {

namespace {

Vec3 closest_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                         const Vec3& c) {
  // Voronoi-region walk (Ericson, Real-Time Collision Detection 5.1.5).
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;
  const Vec3 bp = p - b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));
  const Vec3 cp = p - c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0) {
    return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));
  }
  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

// -1 unless v lies along a coordinate axis.
int axis_of(const Vec3& v) {
  const double tol = 1e-9 * norm(v);
  const bool nx = std::abs(v.x) > tol;
  const bool ny = std::abs(v.y) > tol;
  const bool nz = std::abs(v.z) > tol;
  if (nx + ny + nz != 1) return -1;
  return nx ? 0 : (ny ? 1 : 2);
}

enum class Rule { kTadpole, kThree, kTwo };

class Rewriter {
 public:
  Rewriter(std::vector<Vec3> v, double unit, double tol, std::size_t min_n)
      : v_(std::move(v)), unit_(unit), tol_(tol), min_n_(min_n) {}

  std::vector<Vec3>& vertices() { return v_; }

  std::size_t merge() {
    std::size_t removed = 0;
    bool again = true;
    while (again && v_.size() > 3) {
      again = false;
      for (std::size_t i = 0; i < v_.size() && v_.size() > 3;) {
        if (segments_parallel(seg(i + v_.size() - 1), seg(i))) {
          v_.erase(v_.begin() + static_cast<std::ptrdiff_t>(i));
          ++removed;
          again = true;
        } else {
          ++i;
        }
      }
    }
    return removed;
  }

  std::size_t apply(Rule rule, std::size_t& rejected) {
    const std::size_t k = rule == Rule::kTwo ? 2 : 3;
    std::size_t applied = 0;
    for (std::size_t i = 0; i < v_.size();) {
      if (v_.size() - (k - 1) < min_n_ || !matches(rule, i)) {
        ++i;
        continue;
      }
      if (!sweep_clear(i, k)) {
        ++rejected;
        ++i;
        continue;
      }
      replace_by_chord(i, k);
      ++applied;
      if (i >= v_.size()) i = 0;
    }
    return applied;
  }

 private:
  std::size_t n() const { return v_.size(); }
  const Vec3& at(std::size_t i) const { return v_[i % n()]; }
  Vec3 seg(std::size_t i) const { return at(i + 1) - at(i); }

  bool matches(Rule rule, std::size_t i) const {
    const Vec3 s0 = seg(i);
    const Vec3 s1 = seg(i + 1);
    const int a0 = axis_of(s0);
    const int a1 = axis_of(s1);
    if (a0 < 0 || a1 < 0 || a0 == a1) return false;
    if (rule == Rule::kTwo) return true;
    const Vec3 s2 = seg(i + 2);
    const int a2 = axis_of(s2);
    if (a2 < 0 || a2 == a1) return false;
    const double span = distance(at(i), at(i + 3));
    if (rule == Rule::kTadpole) {
      return a2 == a0 && dot(s0, s2) < 0.0 &&
             std::abs(span - unit_) <= 1e-9 * unit_;
    }
    // x,y,z corner or x,y,x staircase.
    return a2 != a0 || dot(s0, s2) > 0.0;
  }

  // The straight-line homotopy from the path p_i..p_{i+k} to its chord sweeps
  // the fan of triangles (p_i, p_{i+t}, p_{i+t+1}); nothing else may touch it.
  bool sweep_clear(std::size_t i, std::size_t k) const {
    const Vec3& a = at(i);
    const Vec3& b = at(i + k);
    const Vec3 chord = b - a;
    if (!(norm(chord) > tol_)) return false;
    const Vec3 prev = seg(i + n() - 1);
    const Vec3 next = seg(i + k);
    if (segments_parallel(chord, -prev) || segments_parallel(chord, -next)) {
      return false;
    }
    for (std::size_t j = 0; j < n(); ++j) {
      const std::size_t rel = (j + n() - i) % n();
      if (rel < k) continue;  // part of the path
      Vec3 p0 = at(j);
      Vec3 p1 = at(j + 1);
      // Neighbours share an end point with the fan; drop a sliver there.
      if (rel == n() - 1) p1 = p1 - (p1 - p0) * 1e-3;
      if (rel == k) p0 = p0 + (p1 - p0) * 1e-3;
      for (std::size_t t = 1; t < k; ++t) {
        if (segment_triangle_distance(p0, p1, a, at(i + t), at(i + t + 1)) <=
            tol_) {
          return false;
        }
      }
    }
    return true;
  }

  void replace_by_chord(std::size_t& i, std::size_t k) {
    std::vector<std::size_t> drop;
    for (std::size_t t = 1; t < k; ++t) drop.push_back((i + t) % n());
    std::sort(drop.rbegin(), drop.rend());
    std::size_t shift = 0;
    for (std::size_t d : drop) {
      if (d < i) ++shift;
      v_.erase(v_.begin() + static_cast<std::ptrdiff_t>(d));
    }
    i -= shift;
  }

  std::vector<Vec3> v_;
  double unit_;
  double tol_;
  std::size_t min_n_;
};

double default_unit(const DiscreteKnot& knot) {
  double unit = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < knot.size(); ++j) {
    if (axis_of(knot.segment(j)) >= 0) {
      unit = std::min(unit, knot.segment_length(j));
    }
  }
  return std::isfinite(unit) ? unit : knot.min_segment_length();
}

std::vector<Vec3> copy_vertices(const DiscreteKnot& knot) {
  return {knot.vertices().begin(), knot.vertices().end()};
}

}  // namespace

double segment_triangle_distance(const Vec3& p0, const Vec3& p1, const Vec3& a,
                                 const Vec3& b, const Vec3& c) {
  double d = std::min(distance(p0, closest_on_triangle(p0, a, b, c)),
                      distance(p1, closest_on_triangle(p1, a, b, c)));
  const Vec3 nrm = cross(b - a, c - a);
  const double s0 = dot(nrm, p0 - a);
  const double s1 = dot(nrm, p1 - a);
  if ((s0 < 0.0 && s1 > 0.0) || (s0 > 0.0 && s1 < 0.0)) {
    // The segment pierces the plane; inside the triangle this is ~0.
    const Vec3 hit = p0 + (p1 - p0) * (s0 / (s0 - s1));
    d = std::min(d, distance(hit, closest_on_triangle(hit, a, b, c)));
  }
  d = std::min(d, segment_distance(p0, p1, a, b));
  d = std::min(d, segment_distance(p0, p1, b, c));
  d = std::min(d, segment_distance(p0, p1, c, a));
  return d;
}

DiscreteKnot merge_parallel(const DiscreteKnot& knot, std::size_t* removed) {
  Rewriter w(copy_vertices(knot), 1.0, 0.0, 3);
  const std::size_t r = w.merge();
  if (removed) *removed = r;
  return DiscreteKnot(std::move(w.vertices()), knot.name());
}

DiscreteKnot reduce_tadpole(const DiscreteKnot& knot,
                            const ReductionOptions& opts,
                            std::size_t* applied) {
  Rewriter w(copy_vertices(knot), opts.unit.value_or(default_unit(knot)),
             1e-12 * knot.total_length(), opts.min_segments);
  std::size_t rejected = 0;
  const std::size_t a = w.apply(Rule::kTadpole, rejected);
  if (applied) *applied = a;
  return DiscreteKnot(std::move(w.vertices()), knot.name());
}

std::pair<DiscreteKnot, ReductionReport> reduce_lattice(
    const DiscreteKnot& knot, const ReductionOptions& opts) {
  ReductionReport rep;
  rep.n_before = knot.size();
  Rewriter w(copy_vertices(knot), opts.unit.value_or(default_unit(knot)),
             1e-12 * knot.total_length(), opts.min_segments);
  bool changed = true;
  while (changed) {
    ++rep.passes;
    const std::size_t m = w.merge();
    const std::size_t t = w.apply(Rule::kTadpole, rep.rejected);
    const std::size_t three = w.apply(Rule::kThree, rep.rejected);
    const std::size_t two = w.apply(Rule::kTwo, rep.rejected);
    rep.merged += m;
    rep.tadpoles += t;
    rep.three_segment += three;
    rep.two_segment += two;
    changed = m + t + three + two > 0;
  }
  DiscreteKnot out(std::move(w.vertices()), knot.name());
  rep.n_after = out.size();
  return {std::move(out), rep};
}

}  // namespace knotinv
