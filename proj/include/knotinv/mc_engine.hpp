#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotinv/integrand.hpp"
#include "knotinv/rng.hpp"
#include "knotinv/smoothing.hpp"
#include "knotinv/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotinv {

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_used = 0;
  std::uint64_t n_flagged = 0;
  std::uint64_t seed = 0;
};

enum class Execution { kSerial, kParallel };

struct SamplerConfig {
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 1;
  double threshold_sigma = 1.0 / 6.11;
  std::optional<double> epsilon;  // unset: 1e-4 * min segment length
  NormalRule normal_rule = NormalRule::kDiagonal;
  int workers = 0;  // 0: KNOTINV_WORKERS, else the OpenMP default
  Execution execution = Execution::kParallel;
  std::optional<std::uint64_t> n_rho1;  // overrides the volume-ratio split
  std::uint64_t chunk_size = 16384;
  std::uint64_t batch = 1'000'000;  // run_until step
  double max_flagged_fraction = 1e-4;
};

// Framing the config asks for on this knot (validated).
Framing framing_for(const DiscreteKnot& knot, const SamplerConfig& cfg);

int resolve_workers(int requested);

// Ordered point xi_1 >= ... >= xi_m in [0, upper] and its inverse density.
struct SimplexPoint {
  std::array<double, 4> xi{};
  double weight = 0.0;
};

inline SimplexPoint simplex_sample(int m, double upper, RandomStream& rng) {
  SimplexPoint p;
  double top = upper;
  p.weight = upper;
  for (int s = 0; s < m; ++s) {
    p.xi[s] = rng.uniform() * top;
    if (s + 1 < m) p.weight *= p.xi[s];
    top = p.xi[s];
  }
  return p;
}

// upper^m / m!
double simplex_volume(int m, double upper);

MCEstimate to_estimate(const Welford& acc, std::uint64_t seed);

// NumericalGuardError when the non-finite fraction exceeds
// cfg.max_flagged_fraction.
void check_flagged(const Welford& acc, const SamplerConfig& cfg,
                   const char* what);

MCEstimate combine(const MCEstimate& a, const MCEstimate& b);

// Accumulates g(rng) over samples [0, n) split into fixed chunks. Chunk c
// draws from stream (seed, purpose, c) and chunk results merge in chunk order,
// so serial and parallel execution agree bit for bit and the answer does not
// depend on the worker count. Only chunks in [chunk_begin, chunk_end) are
// drawn and merged onto start, which lets callers grow a run in steps with
// the same result as one call.
template <class G>
Welford accumulate_stream(std::uint64_t n, std::uint64_t seed,
                          std::uint32_t purpose, std::uint64_t chunk_size,
                          Execution exec, int workers,
                          std::uint64_t chunk_begin, std::uint64_t chunk_end,
                          const G& g, Welford start = {}) {
  const std::uint64_t n_chunks = (n + chunk_size - 1) / chunk_size;
  chunk_end = std::min(chunk_end, n_chunks);
  if (chunk_begin >= chunk_end) return start;
  const std::uint64_t count = chunk_end - chunk_begin;
  std::vector<Welford> parts(count);

  auto run_chunk = [&](std::uint64_t i) {
    const std::uint64_t c = chunk_begin + i;
    const std::uint64_t lo = c * chunk_size;
    const std::uint64_t hi = std::min(n, lo + chunk_size);
    RandomStream rng(seed, purpose, static_cast<std::uint32_t>(c));
    Welford acc;
    for (std::uint64_t k = lo; k < hi; ++k) acc.add(g(rng));
    parts[i] = acc;
  };

  if (exec == Execution::kParallel && count > 1) {
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers))
    for (long long i = 0; i < total; ++i) {
      run_chunk(static_cast<std::uint64_t>(i));
    }
  } else {
    for (std::uint64_t i = 0; i < count; ++i) run_chunk(i);
  }

  for (const Welford& w : parts) start.merge(w);
  return start;
}

// f(p) * p.weight over simplex_sample(m, upper) draws.
template <class F>
Welford accumulate_chunks(int m, double upper, std::uint64_t n,
                          std::uint64_t seed, std::uint32_t purpose,
                          std::uint64_t chunk_size, Execution exec,
                          int workers, std::uint64_t chunk_begin,
                          std::uint64_t chunk_end, const F& f,
                          Welford start = {}) {
  return accumulate_stream(
      n, seed, purpose, chunk_size, exec, workers, chunk_begin, chunk_end,
      [&](RandomStream& rng) {
        const SimplexPoint p = simplex_sample(m, upper, rng);
        return f(p) * p.weight;
      },
      start);
}

template <class F>
Welford accumulate(int m, double upper, std::uint64_t n, std::uint64_t seed,
                   std::uint32_t purpose, const SamplerConfig& cfg,
                   const F& f) {
  return accumulate_chunks(m, upper, n, seed, purpose, cfg.chunk_size,
                           cfg.execution, cfg.workers, 0, UINT64_MAX, f);
}

// Triple integral over 0 <= U <= T <= S <= N of F1.
MCEstimate integrate_rho1(const SmoothedKnot& sk, const SamplerConfig& cfg);
// Quadruple integral over 0 <= V <= U <= T <= S <= N of F2.
MCEstimate integrate_rho2(const SmoothedKnot& sk, const SamplerConfig& cfg);

struct RhoEstimate {
  MCEstimate rho1;
  MCEstimate rho2;
  MCEstimate total;
  bool threshold_reached = false;
};

// Samples given to rho1 out of n: proportional to N^3/6 : N^4/24 unless
// overridden.
std::uint64_t rho1_share(std::uint64_t n, std::size_t knot_size,
                         const std::optional<std::uint64_t>& override_n1);

RhoEstimate rho(const SmoothedKnot& sk, const SamplerConfig& cfg);

// a2 = (rho + 1/12) / 2.
double conway_a2(double rho_value);

// Draws cfg.batch samples at a time until the standard error of rho drops to
// cfg.threshold_sigma or cfg.n samples are spent. Batches are whole chunks of
// the same streams, so stopping after k samples equals rho() with n = k.
RhoEstimate run_until(const SmoothedKnot& sk, const SamplerConfig& cfg);

struct ConvergenceRow {
  std::uint64_t n = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

std::vector<ConvergenceRow> convergence(const SmoothedKnot& sk,
                                        const std::vector<std::uint64_t>& ladder,
                                        const SamplerConfig& cfg);

// CSV with header "n,mean,stderr".
std::string emit_convergence(const SmoothedKnot& sk,
                             const std::vector<std::uint64_t>& ladder,
                             const SamplerConfig& cfg);

}  // namespace knotinv
