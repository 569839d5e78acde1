#include "knotinv/oracle.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

// Offsets for runs of length 1..4: slot base(r) + t holds (r - t) / (r + 1).
constexpr int kSlots = 10;
constexpr int slot_base(int r) { return r * (r - 1) / 2; }

struct Grid {
  int cells = 0;
  double h = 0.0;
  std::vector<GeomSample> samples;  // cells * kSlots

  const GeomSample& at(int cell, int slot) const {
    return samples[static_cast<std::size_t>(cell) * kSlots + slot];
  }
};

Grid build_grid(const SmoothedKnot& sk, int q) {
  Grid g;
  g.cells = q * static_cast<int>(sk.size());
  g.h = 1.0 / q;
  g.samples.resize(static_cast<std::size_t>(g.cells) * kSlots);
  for (int c = 0; c < g.cells; ++c) {
    for (int r = 1; r <= 4; ++r) {
      for (int t = 0; t < r; ++t) {
        const double off = static_cast<double>(r - t) / (r + 1);
        g.samples[static_cast<std::size_t>(c) * kSlots + slot_base(r) + t] =
            sk.sample((c + off) * g.h);
      }
    }
  }
  return g;
}

// Slot per position and 1 / prod(r!) for a non-increasing cell tuple.
template <int M>
double run_slots(const std::array<int, M>& cell, std::array<int, M>& slot) {
  double inv = 1.0;
  int p = 0;
  while (p < M) {
    int r = 1;
    while (p + r < M && cell[p + r] == cell[p]) ++r;
    for (int t = 0; t < r; ++t) {
      slot[p + t] = slot_base(r) + t;
      inv /= (t + 1);
    }
    p += r;
  }
  return inv;
}

struct Partial {
  double sum = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t flagged = 0;
};

template <class Body>
std::vector<Partial> over_outer(int cells, const QuadratureSpec& spec,
                                const Body& body) {
  std::vector<Partial> parts(cells);
  if (spec.execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic) \
    num_threads(resolve_workers(spec.workers))
    for (int i = 0; i < cells; ++i) parts[i] = body(i);
  } else {
    for (int i = 0; i < cells; ++i) parts[i] = body(i);
  }
  return parts;
}

}  // namespace

OracleResult oracle_rho(const SmoothedKnot& sk, const QuadratureSpec& spec) {
  if (spec.q < 1) throw ConfigError("oracle q must be at least 1");
  const long long qn = static_cast<long long>(spec.q) * sk.size();
  if (qn > spec.cap) {
    throw ConfigError("oracle grid q*N = " + std::to_string(qn) +
                      " exceeds the cap " + std::to_string(spec.cap));
  }
  Framing framing = Framing::standard(sk.base());
  if (spec.epsilon) framing.epsilon = *spec.epsilon;
  framing.rule = spec.normal_rule;
  framing.validate(sk.base());

  const Grid g = build_grid(sk, spec.q);
  const double h3 = g.h * g.h * g.h;
  const double h4 = h3 * g.h;

  auto add = [](Partial& p, double v, double w) {
    ++p.evaluations;
    if (!std::isfinite(v)) {
      ++p.flagged;
      return;
    }
    p.sum += v * w;
  };

  const auto p1 = over_outer(g.cells, spec, [&](int i) {
    Partial p;
    std::array<int, 3> cell{i, 0, 0};
    std::array<int, 3> slot{};
    for (int j = 0; j <= i; ++j) {
      cell[1] = j;
      for (int k = 0; k <= j; ++k) {
        cell[2] = k;
        const double inv = run_slots<3>(cell, slot);
        GeomTriple t;
        t.x = shifted(g.at(i, slot[0]), framing, 0);
        t.y = shifted(g.at(j, slot[1]), framing, 1);
        t.z = shifted(g.at(k, slot[2]), framing, 2);
        add(p, f1(t), h3 * inv);
      }
    }
    return p;
  });

  const auto p2 = over_outer(g.cells, spec, [&](int i) {
    Partial p;
    std::array<int, 4> cell{i, 0, 0, 0};
    std::array<int, 4> slot{};
    for (int j = 0; j <= i; ++j) {
      cell[1] = j;
      for (int k = 0; k <= j; ++k) {
        cell[2] = k;
        for (int l = 0; l <= k; ++l) {
          cell[3] = l;
          const double inv = run_slots<4>(cell, slot);
          GeomTriple t;
          t.x = shifted(g.at(i, slot[0]), framing, 0);
          t.y = shifted(g.at(j, slot[1]), framing, 1);
          t.z = shifted(g.at(k, slot[2]), framing, 2);
          t.w = shifted(g.at(l, slot[3]), framing, 3);
          add(p, f2(t), h4 * inv);
        }
      }
    }
    return p;
  });

  OracleResult r;
  for (const Partial& p : p1) {
    r.rho1 += p.sum;
    r.evaluations += p.evaluations;
    r.n_flagged += p.flagged;
  }
  for (const Partial& p : p2) {
    r.rho2 += p.sum;
    r.evaluations += p.evaluations;
    r.n_flagged += p.flagged;
  }
  r.rho = r.rho1 + r.rho2;
  return r;
}

}  // namespace knotinv
