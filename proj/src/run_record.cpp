#include "knotinv/run_record.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "knotinv/errors.hpp"

namespace knotinv {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return fnv1a_hex(data);
}

nlohmann::json to_json(const MCEstimate& e) {
  return {{"mean", e.mean},
          {"stderr", e.std_error},
          {"n", e.n_used},
          {"n_flagged", e.n_flagged},
          {"seed", e.seed}};
}

nlohmann::json to_json(const SamplerConfig& cfg) {
  nlohmann::json j = {
      {"n", cfg.n},
      {"seed", cfg.seed},
      {"threshold_sigma", cfg.threshold_sigma},
      {"normal_rule",
       cfg.normal_rule == NormalRule::kDiagonal ? "diagonal" : "tangent"},
      {"chunk_size", cfg.chunk_size},
      {"batch", cfg.batch},
      {"max_flagged_fraction", cfg.max_flagged_fraction}};
  j["epsilon"] = cfg.epsilon ? nlohmann::json(*cfg.epsilon) : nlohmann::json();
  j["n_rho1"] = cfg.n_rho1 ? nlohmann::json(*cfg.n_rho1) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const RhoEstimate& r) {
  return {{"mean", r.total.mean},
          {"stderr", r.total.std_error},
          {"n", r.total.n_used},
          {"n_flagged", r.total.n_flagged},
          {"seed", r.total.seed},
          {"rho1", to_json(r.rho1)},
          {"rho2", to_json(r.rho2)},
          {"a2", conway_a2(r.total.mean)},
          {"threshold_reached", r.threshold_reached}};
}

nlohmann::json to_json(const ReductionReport& r) {
  return {{"n_before", r.n_before},         {"n_after", r.n_after},
          {"merged", r.merged},             {"tadpoles", r.tadpoles},
          {"two_segment", r.two_segment},   {"three_segment", r.three_segment},
          {"rejected", r.rejected},         {"passes", r.passes}};
}

nlohmann::json to_json(const DeltaEstimate& d) {
  return {{"delta_mean", d.delta.mean},
          {"stderr", d.delta.std_error},
          {"verdict", to_string(d.verdict)},
          {"delta1", to_json(d.delta1)},
          {"delta2", to_json(d.delta2)},
          {"range_begin", d.range_begin},
          {"range_count", d.range_count},
          {"strata_sampler", d.strata}};
}

nlohmann::json plan_json(const CornerPlan& plan) {
  static const char* kRules[] = {"none", "1",  "2a", "2b",
                                 "2c",   "3a", "3b"};
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const Corner& c = plan[k];
    arr.push_back({{"corner", k},
                   {"status", c.status == CornerStatus::kSmoothed
                                  ? "SMOOTHED"
                                  : "PARALLEL_SKIP"},
                   {"d", c.d_in},
                   {"d_prime", c.d_out},
                   {"rule", kRules[static_cast<int>(c.rule)]},
                   {"halvings", c.halvings}});
  }
  return arr;
}

nlohmann::json RunRecord::json() const {
  nlohmann::json in = nlohmann::json::array();
  for (const auto& [path, sum] : inputs) {
    in.push_back({{"path", path}, {"fnv1a", sum}});
  }
  return {{"command", command}, {"version", kVersion}, {"config", config},
          {"inputs", in},       {"results", results},  {"wall_time", wall_time}};
}

}  // namespace knotinv
