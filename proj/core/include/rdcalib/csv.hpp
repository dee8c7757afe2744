#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/discretize.hpp"
#include "rdcalib/experiments.hpp"

namespace rdcalib {

// Schema tags written as the first line of every CSV ("# <tag>"). Readers
// check the tag and fail loudly on a mismatch.
inline constexpr const char* kTrialsSchema = "rdcalib-trials-v1";
inline constexpr const char* kTimingsSchema = "rdcalib-timings-v1";
inline constexpr const char* kBenchmarkSchema = "rdcalib-benchmark-v1";
inline constexpr const char* kSweepSchema = "rdcalib-mqsweep-v1";
inline constexpr const char* kImpulseSchema = "rdcalib-impulse-v1";
inline constexpr const char* kSeriesSchema = "rdcalib-series-v1";
inline constexpr const char* kImpulseSetSchema = "rdcalib-impulse-set-v1";
inline constexpr const char* kTraceSchema = "rdcalib-bpdn-trace-v1";
inline constexpr const char* kPlotSchema = "rdcalib-plot-v1";

// Doubles are written with %.17g ('.' decimal separator); NaN becomes an
// empty cell and reads back as NaN.
std::string format_cell(double value);

struct CsvTable {
  std::string schema;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
  double number(std::size_t row, int column) const;
};

CsvTable read_csv(const std::filesystem::path& path);
CsvTable read_csv(const std::filesystem::path& path, const std::string& expected_schema);

void write_csv(const std::filesystem::path& path, const std::string& schema,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Deterministic per-trial fields only; checksums are stable across reruns
// with the same seed.
void write_trials_csv(const std::filesystem::path& path,
                      const std::vector<TrialRecord>& records);

// Wall-clock seconds per phase, one row per trial (non-deterministic).
void write_timings_csv(const std::filesystem::path& path,
                       const std::vector<TrialRecord>& records);
void write_benchmark_csv(const std::filesystem::path& path,
                         const std::vector<BenchmarkRecord>& records);
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<MqSweepCell>& cells);

// (index, value) rows, one per tap.
void write_impulse_csv(const std::filesystem::path& path, const ImpulseResponse& h);

// (index, value) rows for any sampled series (signals, measurements).
void write_series_csv(const std::filesystem::path& path, const Eigen::VectorXd& values);

// Nominal response plus a set of realized responses, one column per series.
void write_impulse_set_csv(const std::filesystem::path& path,
                           const ImpulseResponse& nominal,
                           const std::vector<ImpulseResponse>& realized);

// (iteration, residual_norm, one_norm, radius_update) per solver step.
void write_bpdn_trace_csv(const std::filesystem::path& path, const BpdnResult& result);

}  // namespace rdcalib
