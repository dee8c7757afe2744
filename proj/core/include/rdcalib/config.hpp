#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rdcalib/calibrate.hpp"
#include "rdcalib/experiments.hpp"

namespace rdcalib {

// JSON <-> ExperimentConfig. Unknown keys and malformed values raise
// ConfigError. Keys carry explicit units (grid_rate_hz, duration_s, ...).
ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json_text(const ExperimentConfig& config);

// JSON for the component set and tolerance model (SI base units, field names
// as in LcComponents).
std::string components_to_json_text(const LcComponents& components);
LcComponents components_from_json_text(const std::string& text);
std::string tolerance_to_json_text(const ToleranceModel& model);
ToleranceModel tolerance_from_json_text(const std::string& text);

// Calibration artifacts: error estimate, calibrated taps, branch, residual
// and row bookkeeping.
std::string calibration_result_to_json_text(const CalibrationResult& result);

// FNV-1a over the canonical (key-sorted) serialization, so hashes are stable
// under key reordering in the input file.
std::string config_hash(const ExperimentConfig& config);

struct RunManifest {
  std::string tool_version;
  std::string config_hash;
  std::string resolved_config_json;
  std::uint64_t master_seed = 0;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> outputs;  // file name + schema tag pairs, "name:schema"
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace rdcalib
