#include "support/lattice_walk.hpp"

#include <array>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "knotinv/errors.hpp"
#include "knotinv/rng.hpp"

namespace knotinv::testing {

namespace {

using P = std::array<int, 3>;

constexpr std::array<P, 6> kDirs{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                  {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

P add(const P& a, const P& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
P sub(const P& a, const P& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::int64_t key(const P& p) {
  return (std::int64_t{p[0] + (1 << 20)} << 42) |
         (std::int64_t{p[1] + (1 << 20)} << 21) | std::int64_t{p[2] + (1 << 20)};
}

std::vector<P> to_walk(const DiscreteKnot& knot) {
  // Unit steps on the integer lattice, after dividing by the step length.
  const double unit = knot.min_segment_length();
  std::vector<P> w;
  for (std::size_t j = 0; j < knot.size(); ++j) {
    const Vec3 a = knot.vertex(j) / unit;
    const Vec3 s = knot.segment(j) / unit;
    const int steps = static_cast<int>(std::lround(norm(s)));
    const P base{static_cast<int>(std::lround(a.x)),
                 static_cast<int>(std::lround(a.y)),
                 static_cast<int>(std::lround(a.z))};
    const P d{static_cast<int>(std::lround(s.x / steps)),
              static_cast<int>(std::lround(s.y / steps)),
              static_cast<int>(std::lround(s.z / steps))};
    P cur = base;
    for (int t = 0; t < steps; ++t) {
      w.push_back(cur);
      cur = add(cur, d);
    }
  }
  return w;
}

DiscreteKnot from_walk(const std::vector<P>& w, const std::string& name) {
  std::vector<Vec3> v;
  v.reserve(w.size());
  for (const P& p : w) v.push_back({double(p[0]), double(p[1]), double(p[2])});
  return DiscreteKnot(std::move(v), name);
}

}  // namespace

DiscreteKnot grow_lattice_knot(const DiscreteKnot& start, std::size_t target_n,
                               std::uint64_t seed, std::size_t flips) {
  std::vector<P> w = to_walk(start);
  std::unordered_set<std::int64_t> occ;
  for (const P& p : w) occ.insert(key(p));
  RandomStream rng(seed, StreamPurpose::kTest, 0);

  auto attempt = [&](bool allow_grow) {
    const std::size_t n = w.size();
    const std::size_t i = rng.next_u32() % n;
    const std::size_t ip = (i + n - 1) % n;
    const std::size_t i1 = (i + 1) % n;
    const std::size_t i2 = (i + 2) % n;
    const P a = w[i];
    const P b = w[i1];
    const P e = sub(b, a);
    P d;
    do {
      d = kDirs[rng.next_u32() % 6];
    } while (std::abs(d[0] * e[0] + d[1] * e[1] + d[2] * e[2]) != 0);
    const P ad = add(a, d);
    const P bd = add(b, d);
    const bool prev_up = w[ip] == ad;
    const bool next_up = w[i2] == bd;
    if (prev_up && next_up) {
      if (allow_grow || n <= 4) return;
      // -2: the U (ad, a, b, bd) collapses to the edge (ad, bd).
      occ.erase(key(a));
      occ.erase(key(b));
      if (i1 > i) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i1));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        w.erase(w.begin());
      }
    } else if (prev_up) {
      if (occ.count(key(bd))) return;
      occ.erase(key(a));
      w[i] = bd;
      occ.insert(key(bd));
    } else if (next_up) {
      if (occ.count(key(ad))) return;
      occ.erase(key(b));
      w[i1] = ad;
      occ.insert(key(ad));
    } else if (allow_grow) {
      if (occ.count(key(ad)) || occ.count(key(bd))) return;
      occ.insert(key(ad));
      occ.insert(key(bd));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), {ad, bd});
    }
  };

  std::size_t guard = 0;
  const std::size_t limit = 1000 * (target_n + flips);
  while (w.size() < target_n && guard++ < limit) attempt(rng.uniform() < 0.5);
  for (std::size_t k = 0; k < flips; ++k) attempt(rng.uniform() < 0.5);
  while (w.size() < target_n && guard++ < limit) attempt(true);
  while (w.size() > target_n && guard++ < limit) attempt(false);
  if (w.size() != target_n) throw InputError("lattice growth did not converge");
  return from_walk(w, start.name());
}

DiscreteKnot add_detour(const DiscreteKnot& knot, std::size_t j, int dir,
                        int depth) {
  std::vector<P> w = to_walk(knot);
  if (knot.size() != w.size()) {
    throw InputError("add_detour needs a unit-step lattice polygon");
  }
  const std::size_t n = w.size();
  j %= n;
  const P a = w[j];
  const P b = w[(j + 1) % n];
  const P d = kDirs[static_cast<std::size_t>(dir)];
  std::vector<P> ins;
  for (int t = 1; t <= depth; ++t) ins.push_back(add(a, {d[0] * t, d[1] * t, d[2] * t}));
  for (int t = depth; t >= 1; --t) ins.push_back(add(b, {d[0] * t, d[1] * t, d[2] * t}));
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(j + 1), ins.begin(), ins.end());
  std::unordered_set<std::int64_t> seen;
  for (const P& p : w) {
    if (!seen.insert(key(p)).second) {
      throw InputError("detour is not self-avoiding");
    }
  }
  return from_walk(w, knot.name());
}

}  // namespace knotinv::testing
