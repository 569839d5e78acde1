#include "knotinv/delta_rho.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

std::vector<Vec3> vertex_list(const DiscreteKnot& k) {
  return {k.vertices().begin(), k.vertices().end()};
}

// Splits the longest segment among [first, first + count) (indices into v,
// non-wrapping) at its midpoint.
void split_longest(std::vector<Vec3>& v, std::size_t first, std::size_t count) {
  const std::size_t n = v.size();
  std::size_t best = first;
  double best_len = -1.0;
  for (std::size_t j = first; j < first + count; ++j) {
    const double len = distance(v[j % n], v[(j + 1) % n]);
    if (len > best_len) {
      best_len = len;
      best = j;
    }
  }
  const Vec3 mid = (v[best % n] + v[(best + 1) % n]) * 0.5;
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(best % n + 1), mid);
}

bool same_corner(const Corner& a, const Corner& b) {
  return a.status == b.status && a.d_in == b.d_in && a.d_out == b.d_out;
}

// Segment j of a smoothed knot is fixed by vertices j-1 .. j+2 and the
// corners j and j+1.
std::vector<bool> differing_segments(const SmoothedKnot& a,
                                     const SmoothedKnot& b) {
  const std::size_t n = a.size();
  std::vector<bool> diff(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    bool d = false;
    for (std::size_t t = 0; t < 4 && !d; ++t) {
      const std::size_t v = (j + n - 1 + t) % n;
      d = !(a.base().vertex(v) == b.base().vertex(v));
    }
    d = d || !same_corner(a.plan()[j], b.plan()[j]) ||
        !same_corner(a.plan()[j + 1], b.plan()[j + 1]);
    diff[j] = d;
  }
  return diff;
}

// Smallest cyclic arc [begin, begin + count) covering every marked entry.
std::pair<std::size_t, std::size_t> covering_arc(const std::vector<bool>& mark) {
  const std::size_t n = mark.size();
  if (std::none_of(mark.begin(), mark.end(), [](bool b) { return b; })) {
    return {0, 0};
  }
  // The longest cyclic run of unmarked entries is left out.
  std::size_t best_len = 0;
  std::size_t best_end = 0;  // first marked index after that run
  for (std::size_t i = 0; i < n; ++i) {
    if (!mark[i] || mark[(i + n - 1) % n]) continue;
    std::size_t len = 0;
    for (std::size_t j = (i + n - 1) % n; !mark[j]; j = (j + n - 1) % n) ++len;
    if (len > best_len) {
      best_len = len;
      best_end = i;
    }
  }
  return {best_end, n - best_len};
}

struct Range {
  double begin = 0.0;
  double count = 0.0;
  double n = 0.0;
  bool contains(double x) const {
    double rel = x - begin;
    if (rel < 0.0) rel += n;
    return rel < count;
  }
};

double binom(int m, int j) {
  double r = 1.0;
  for (int t = 1; t <= j; ++t) r = r * (m - j + t) / t;
  return r;
}

template <int M>
struct TupleDiff {
  const SmoothedKnot* t;
  const SmoothedKnot* r;
  Framing framing;
  double operator()(const std::array<double, 4>& xi) const {
    GeomTriple a;
    GeomTriple b;
    GeomSample* pa[4] = {&a.x, &a.y, &a.z, &a.w};
    GeomSample* pb[4] = {&b.x, &b.y, &b.z, &b.w};
    for (int s = 0; s < M; ++s) {
      *pa[s] = shifted(t->sample(xi[s]), framing, s);
      *pb[s] = shifted(r->sample(xi[s]), framing, s);
    }
    if constexpr (M == 3) {
      return f1(a) - f1(b);
    } else {
      return f2(a) - f2(b);
    }
  }
};

template <int M, class D>
Welford sample_restricted(const D& diff, const Range& range,
                          bool strata, std::uint64_t n, std::uint64_t seed,
                          StreamPurpose purpose, const SamplerConfig& cfg) {
  const double big_n = range.n;
  const double k = range.count;
  const double measure =
      (std::pow(big_n, M) - std::pow(big_n - k, M)) / (M == 3 ? 6.0 : 24.0);
  // P(j of the M coordinates fall in the range), j >= 1.
  std::array<double, 5> cdf{};
  double acc = 0.0;
  for (int j = 1; j <= M; ++j) {
    acc += binom(M, j) * std::pow(k, j) * std::pow(big_n - k, M - j);
    cdf[j] = acc;
  }
  const double outside = big_n - k;
  const double inside_begin = range.begin;
  const double outside_begin = std::fmod(range.begin + k, big_n);

  auto draw = [&](RandomStream& rng) -> double {
    if (!strata) {
      const SimplexPoint p = simplex_sample(M, big_n, rng);
      bool hit = false;
      for (int s = 0; s < M; ++s) hit = hit || range.contains(p.xi[s]);
      return hit ? diff(p.xi) * p.weight : 0.0;
    }
    const double u = rng.uniform() * acc;
    int j = 1;
    while (j < M && u >= cdf[j]) ++j;
    std::array<double, 4> xi{};
    for (int s = 0; s < M; ++s) {
      const double base = s < j ? inside_begin : outside_begin;
      const double len = s < j ? k : outside;
      double x = base + rng.uniform() * len;
      if (x >= big_n) x -= big_n;
      xi[s] = x;
    }
    std::sort(xi.begin(), xi.begin() + M, std::greater<>());
    return diff(xi) * measure;
  };
  return accumulate_stream(n, seed, static_cast<std::uint32_t>(purpose),
                           cfg.chunk_size, cfg.execution, cfg.workers, 0,
                           UINT64_MAX, draw);
}

struct Unit {
  double operator()(const std::array<double, 4>&) const { return 1.0; }
};

}  // namespace

Deformation make_deformation(const DiscreteKnot& reference,
                             const DiscreteKnot& transformed) {
  std::vector<Vec3> a = vertex_list(reference);
  std::vector<Vec3> b = vertex_list(transformed);
  const std::size_t shorter = std::min(a.size(), b.size());
  std::size_t pre = 0;
  while (pre < shorter && a[pre] == b[pre]) ++pre;
  if (pre == a.size() && a.size() == b.size()) {
    return {reference, transformed, 0, 0};
  }
  std::size_t suf = 0;
  while (suf < shorter - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) {
    ++suf;
  }
  // Changed vertices [pre, size - suf); segments touching them start one
  // earlier. Counted without wrap from first = pre - 1 (mod N).
  auto block = [&](const std::vector<Vec3>& v) {
    return v.size() - suf - pre + 1;
  };
  auto pad = [&](std::vector<Vec3>& v, std::size_t target) {
    while (block(v) < target) {
      const std::size_t first = pre == 0 ? v.size() - 1 : pre - 1;
      split_longest(v, first, block(v));
    }
  };
  // Splitting at index >= first keeps the prefix; with pre == 0 the split may
  // land on the last segment, which is inside the block by construction.
  pad(a, block(b));
  pad(b, block(a));
  DiscreteKnot ra(std::move(a), reference.name());
  DiscreteKnot tb(std::move(b), transformed.name());
  const std::size_t n = ra.size();
  const std::size_t first = (pre + n - 1) % n;
  return {std::move(ra), std::move(tb), first, n - suf - pre + 1};
}

double s_k(std::int64_t n, std::int64_t k, int m) {
  if (k < 0 || n < 0 || k > n) throw DomainError("s_k needs 0 <= K <= N");
  if (m != 3 && m != 4) throw DomainError("s_k order must be 3 or 4");
  __int128 p = 1;
  __int128 q = 1;
  for (int t = 0; t < m; ++t) {
    p *= n;
    q *= (n - k);
  }
  return static_cast<double>(p - q) / (m == 3 ? 6.0 : 24.0);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSameClass:
      return "SAME_CLASS";
    case Verdict::kChanged:
      return "CHANGED";
    case Verdict::kInconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

Verdict classify(const MCEstimate& e) {
  const double m = std::abs(e.mean);
  if (m + 3.0 * e.std_error < 1.0) return Verdict::kSameClass;
  if (m - 3.0 * e.std_error > 1.0) return Verdict::kChanged;
  return Verdict::kInconclusive;
}

MCEstimate restricted_measure(std::size_t n, std::size_t begin,
                              std::size_t count, int m, bool strata,
                              const SamplerConfig& cfg) {
  if (count == 0 || count > n) throw DomainError("need 0 < count <= n");
  if (m != 3 && m != 4) throw DomainError("order must be 3 or 4");
  const Range range{static_cast<double>(begin % n), static_cast<double>(count),
                    static_cast<double>(n)};
  const Welford w =
      m == 3 ? sample_restricted<3>(Unit{}, range, strata, cfg.n, cfg.seed,
                                    StreamPurpose::kTest, cfg)
             : sample_restricted<4>(Unit{}, range, strata, cfg.n, cfg.seed,
                                    StreamPurpose::kTest, cfg);
  return to_estimate(w, cfg.seed);
}

DeltaEstimate delta_rho(const Deformation& def, const SamplerConfig& cfg) {
  const std::size_t n = def.reference.size();
  if (def.transformed.size() != n) {
    throw InputError("deformation knots must have the same vertex count");
  }
  if (def.count > n) throw DomainError("changed range longer than the knot");
  if (cfg.n < 2) throw ConfigError("delta needs at least 2 samples");

  const SmoothedKnot sr = SmoothedKnot::smooth(def.reference);
  const SmoothedKnot st = SmoothedKnot::smooth(def.transformed);

  std::vector<bool> mark = differing_segments(sr, st);
  for (std::size_t t = 0; t < def.count; ++t) mark[(def.begin + t) % n] = true;
  const auto [begin, count] = covering_arc(mark);

  DeltaEstimate out;
  out.range_begin = begin;
  out.range_count = count;
  for (MCEstimate* e : {&out.delta, &out.delta1, &out.delta2}) e->seed = cfg.seed;
  if (count == 0) {
    out.verdict = classify(out.delta);
    return out;
  }

  // One framing for both knots so untouched geometry matches exactly.
  Framing framing = Framing::standard(def.reference);
  framing.epsilon = std::min(framing.epsilon,
                             Framing::standard(def.transformed).epsilon);
  if (cfg.epsilon) framing.epsilon = *cfg.epsilon;
  framing.rule = cfg.normal_rule;
  framing.validate(def.reference);
  framing.validate(def.transformed);

  const Range range{static_cast<double>(begin), static_cast<double>(count),
                    static_cast<double>(n)};
  out.strata = static_cast<double>(count) < 0.1 * static_cast<double>(n);

  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(count);
  const double v3 = s_k(nn, kk, 3);
  const double v4 = s_k(nn, kk, 4);
  std::uint64_t n1 = cfg.n_rho1.value_or(static_cast<std::uint64_t>(
      std::llround(static_cast<double>(cfg.n) * v3 / (v3 + v4))));
  n1 = std::clamp<std::uint64_t>(n1, 1, cfg.n - 1);

  const Welford a1 =
      sample_restricted<3>(TupleDiff<3>{&st, &sr, framing}, range, out.strata, n1,
                        cfg.seed, StreamPurpose::kDelta1, cfg);
  const Welford a2 = sample_restricted<4>(TupleDiff<4>{&st, &sr, framing}, range,
                                       out.strata, cfg.n - n1, cfg.seed,
                                       StreamPurpose::kDelta2, cfg);
  check_flagged(a1, cfg, "delta rho1");
  check_flagged(a2, cfg, "delta rho2");
  out.delta1 = to_estimate(a1, cfg.seed);
  out.delta2 = to_estimate(a2, cfg.seed);
  out.delta = combine(out.delta1, out.delta2);
  out.verdict = classify(out.delta);
  return out;
}

}  // namespace knotinv
