#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "knotinv/vec3.hpp"

namespace knotinv {

struct KnotMetadata {
  double total_length = 0.0;
  bool is_cubic_lattice = false;
  std::string name;
};

// A closed polygon with vertices p_0 .. p_{N-1}. The curve parameter S runs
// over [0, N]; segment j covers S in [j, j+1) and goes from p_j to p_{j+1}
// (indices mod N), so X(k) = p_k for integer k and X(0) = X(N) = p_0.
//
// The constructor validates: N >= 3, no zero-length segment, no immediate
// reversal, and no two segments closer than 1e-12 * total length except at
// shared endpoints. Immutable afterwards.
class DiscreteKnot {
 public:
  explicit DiscreteKnot(std::vector<Vec3> vertices, std::string name = {});

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec3> vertices() const { return vertices_; }
  const Vec3& vertex(std::size_t k) const { return vertices_[k % size()]; }

  // p_{j+1} - p_j.
  Vec3 segment(std::size_t j) const {
    return vertex(j + 1) - vertex(j);
  }
  double segment_length(std::size_t j) const { return lengths_[j % size()]; }
  std::span<const double> segment_lengths() const { return lengths_; }

  double total_length() const { return total_length_; }
  double min_segment_length() const { return min_length_; }
  bool is_cubic_lattice() const { return is_lattice_; }
  const std::string& name() const { return name_; }
  KnotMetadata metadata() const {
    return {total_length_, is_lattice_, name_};
  }

 private:
  std::vector<Vec3> vertices_;
  std::vector<double> lengths_;
  std::string name_;
  double total_length_ = 0.0;
  double min_length_ = 0.0;
  bool is_lattice_ = false;
};

// S split into a segment index and the fraction along it.
struct ParamPoint {
  std::size_t segment = 0;
  double fraction = 0.0;
};

// S = N maps to the last segment with fraction 1.
ParamPoint locate(const DiscreteKnot& knot, double S);

Vec3 point_at(const DiscreteKnot& knot, double S);

// Raw segment vector p_{j+1} - p_j (not normalized). At integer S the
// following segment is used, and X'(N) = X'(0).
Vec3 tangent_at(const DiscreteKnot& knot, double S);

Vec3 centroid(const DiscreteKnot& knot);

// Scales about the centroid.
DiscreteKnot rescale(const DiscreteKnot& knot, double eta);

// Euclidean distance between segments [p0,p1] and [q0,q1].
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0,
                        const Vec3& q1);

bool segments_parallel(const Vec3& a, const Vec3& b, double tol = 1e-9);

}  // namespace knotinv
