#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knotinv/delta_rho.hpp"
#include "knotinv/mc_engine.hpp"
#include "knotinv/reduction.hpp"
#include "knotinv/smoothing.hpp"

namespace knotinv {

inline constexpr const char* kVersion = "0.1.0";

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);
std::string file_checksum(const std::filesystem::path& path);

nlohmann::json to_json(const MCEstimate& e);
nlohmann::json to_json(const SamplerConfig& cfg);
nlohmann::json to_json(const RhoEstimate& r);
nlohmann::json to_json(const ReductionReport& r);
nlohmann::json to_json(const DeltaEstimate& d);
nlohmann::json plan_json(const CornerPlan& plan);

// Everything needed to rerun a command: the command line, the configuration,
// checksums of the inputs and the results.
struct RunRecord {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  // path, checksum
  nlohmann::json results = nlohmann::json::object();
  double wall_time = 0.0;

  nlohmann::json json() const;
};

}  // namespace knotinv
