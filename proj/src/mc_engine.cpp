#include "knotinv/mc_engine.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "knotinv/errors.hpp"

namespace knotinv {

namespace {

struct Rho1Integrand {
  const SmoothedKnot* sk;
  Framing framing;
  double operator()(const SimplexPoint& p) const {
    GeomTriple t;
    t.x = shifted(sk->sample(p.xi[0]), framing, 0);
    t.y = shifted(sk->sample(p.xi[1]), framing, 1);
    t.z = shifted(sk->sample(p.xi[2]), framing, 2);
    return f1(t);
  }
};

struct Rho2Integrand {
  const SmoothedKnot* sk;
  Framing framing;
  double operator()(const SimplexPoint& p) const {
    GeomTriple t;
    t.x = shifted(sk->sample(p.xi[0]), framing, 0);
    t.y = shifted(sk->sample(p.xi[1]), framing, 1);
    t.z = shifted(sk->sample(p.xi[2]), framing, 2);
    t.w = shifted(sk->sample(p.xi[3]), framing, 3);
    return f2(t);
  }
};

void check_config(const SamplerConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("sample count must be at least 1");
  if (!(cfg.threshold_sigma > 0.0)) {
    throw ConfigError("threshold sigma must be positive");
  }
  if (cfg.chunk_size < 1) throw ConfigError("chunk size must be positive");
}

}  // namespace

void check_flagged(const Welford& acc, const SamplerConfig& cfg,
                   const char* what) {
  const double seen = static_cast<double>(acc.count + acc.flagged);
  if (seen > 0 &&
      static_cast<double>(acc.flagged) / seen > cfg.max_flagged_fraction) {
    std::ostringstream os;
    os << what << ": " << acc.flagged << " of " << acc.count + acc.flagged
       << " samples were non-finite";
    throw NumericalGuardError(os.str());
  }
}

MCEstimate combine(const MCEstimate& a, const MCEstimate& b) {
  MCEstimate t;
  t.mean = a.mean + b.mean;
  t.std_error = std::hypot(a.std_error, b.std_error);
  t.n_used = a.n_used + b.n_used;
  t.n_flagged = a.n_flagged + b.n_flagged;
  t.seed = a.seed;
  return t;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KNOTINV_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Framing framing_for(const DiscreteKnot& knot, const SamplerConfig& cfg) {
  Framing f = Framing::standard(knot);
  if (cfg.epsilon) f.epsilon = *cfg.epsilon;
  f.rule = cfg.normal_rule;
  f.validate(knot);
  return f;
}

double simplex_volume(int m, double upper) {
  double v = 1.0;
  for (int k = 1; k <= m; ++k) v *= upper / k;
  return v;
}

MCEstimate to_estimate(const Welford& acc, std::uint64_t seed) {
  return {acc.mean, acc.std_error(), acc.count, acc.flagged, seed};
}

MCEstimate integrate_rho1(const SmoothedKnot& sk, const SamplerConfig& cfg) {
  check_config(cfg);
  const Rho1Integrand f{&sk, framing_for(sk.base(), cfg)};
  const Welford acc =
      accumulate(3, static_cast<double>(sk.size()), cfg.n, cfg.seed,
                 static_cast<std::uint32_t>(StreamPurpose::kRho1), cfg, f);
  check_flagged(acc, cfg, "rho1");
  return to_estimate(acc, cfg.seed);
}

MCEstimate integrate_rho2(const SmoothedKnot& sk, const SamplerConfig& cfg) {
  check_config(cfg);
  const Rho2Integrand f{&sk, framing_for(sk.base(), cfg)};
  const Welford acc =
      accumulate(4, static_cast<double>(sk.size()), cfg.n, cfg.seed,
                 static_cast<std::uint32_t>(StreamPurpose::kRho2), cfg, f);
  check_flagged(acc, cfg, "rho2");
  return to_estimate(acc, cfg.seed);
}

std::uint64_t rho1_share(std::uint64_t n, std::size_t knot_size,
                         const std::optional<std::uint64_t>& override_n1) {
  if (override_n1) {
    if (*override_n1 >= n) throw ConfigError("rho1 budget must be below n");
    return *override_n1;
  }
  // V1 / (V1 + V2) = 4 / (4 + N).
  const double share = 4.0 / (4.0 + static_cast<double>(knot_size));
  const auto n1 = static_cast<std::uint64_t>(std::llround(share * n));
  return std::clamp<std::uint64_t>(n1, 1, n > 1 ? n - 1 : 1);
}

RhoEstimate rho(const SmoothedKnot& sk, const SamplerConfig& cfg) {
  check_config(cfg);
  if (cfg.n < 2) throw ConfigError("rho needs at least 2 samples");
  SamplerConfig c1 = cfg;
  SamplerConfig c2 = cfg;
  c1.n = rho1_share(cfg.n, sk.size(), cfg.n_rho1);
  c2.n = cfg.n - c1.n;
  RhoEstimate r;
  r.rho1 = integrate_rho1(sk, c1);
  r.rho2 = integrate_rho2(sk, c2);
  r.total = combine(r.rho1, r.rho2);
  r.threshold_reached = r.total.std_error <= cfg.threshold_sigma;
  return r;
}

double conway_a2(double rho_value) { return (rho_value + 1.0 / 12.0) / 2.0; }

RhoEstimate run_until(const SmoothedKnot& sk, const SamplerConfig& cfg) {
  check_config(cfg);
  if (cfg.n < 2) throw ConfigError("rho needs at least 2 samples");
  if (std::isinf(cfg.threshold_sigma)) return rho(sk, cfg);

  const Framing framing = framing_for(sk.base(), cfg);
  const Rho1Integrand g1{&sk, framing};
  const Rho2Integrand g2{&sk, framing};
  const double upper = static_cast<double>(sk.size());
  const std::uint64_t cs = cfg.chunk_size;
  const std::uint64_t step = std::max<std::uint64_t>(
      cs, (cfg.batch + cs - 1) / cs * cs);
  const auto p1 = static_cast<std::uint32_t>(StreamPurpose::kRho1);
  const auto p2 = static_cast<std::uint32_t>(StreamPurpose::kRho2);

  // Full chunks are kept; the trailing partial chunk is redrawn each step.
  Welford full1, full2;
  std::uint64_t done1 = 0, done2 = 0;
  RhoEstimate r;
  for (std::uint64_t k = std::min(step, cfg.n);; k = std::min(k + step, cfg.n)) {
    const std::uint64_t n1 = rho1_share(k, sk.size(), cfg.n_rho1);
    const std::uint64_t n2 = k - n1;
    auto advance = [&](int m, std::uint64_t n, std::uint32_t purpose,
                       Welford& full, std::uint64_t& done, const auto& f) {
      const std::uint64_t whole = n / cs;
      full = accumulate_chunks(m, upper, n, cfg.seed, purpose, cs,
                               cfg.execution, cfg.workers, done, whole, f,
                               full);
      done = whole;
      return accumulate_chunks(m, upper, n, cfg.seed, purpose, cs,
                               cfg.execution, cfg.workers, whole, whole + 1,
                               f, full);
    };
    const Welford a1 = advance(3, n1, p1, full1, done1, g1);
    const Welford a2 = advance(4, n2, p2, full2, done2, g2);
    check_flagged(a1, cfg, "rho1");
    check_flagged(a2, cfg, "rho2");
    r.rho1 = to_estimate(a1, cfg.seed);
    r.rho2 = to_estimate(a2, cfg.seed);
    r.total = combine(r.rho1, r.rho2);
    r.threshold_reached = r.total.std_error <= cfg.threshold_sigma;
    if (r.threshold_reached || k >= cfg.n) break;
  }
  return r;
}

std::vector<ConvergenceRow> convergence(
    const SmoothedKnot& sk, const std::vector<std::uint64_t>& ladder,
    const SamplerConfig& cfg) {
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t n : ladder) {
    SamplerConfig c = cfg;
    c.n = n;
    const RhoEstimate r = rho(sk, c);
    rows.push_back({n, r.total.mean, r.total.std_error});
  }
  return rows;
}

std::string emit_convergence(const SmoothedKnot& sk,
                             const std::vector<std::uint64_t>& ladder,
                             const SamplerConfig& cfg) {
  std::ostringstream os;
  os.precision(10);
  os << "n,mean,stderr\n";
  for (const ConvergenceRow& row : convergence(sk, ladder, cfg)) {
    os << row.n << ',' << row.mean << ',' << row.std_error << '\n';
  }
  return os.str();
}

}  // namespace knotinv
