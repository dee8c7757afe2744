#include "rdcalib/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rdcalib {

std::string format_cell(double value) {
  if (std::isnan(value)) return "";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer);
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

double CsvTable::number(std::size_t row, int col) const {
  if (row >= rows.size() || col < 0 ||
      static_cast<std::size_t>(col) >= rows[row].size()) {
    throw std::out_of_range("csv: cell out of range");
  }
  const std::string& cell = rows[row][static_cast<std::size_t>(col)];
  if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::stod(cell);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) throw std::runtime_error("csv: cannot read " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(stream, line) || line.rfind("# ", 0) != 0) {
    throw std::runtime_error("csv: missing schema line in " + path.string());
  }
  table.schema = line.substr(2);
  if (std::getline(stream, line)) table.header = split_line(line);
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    table.rows.push_back(split_line(line));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path,
                  const std::string& expected_schema) {
  CsvTable table = read_csv(path);
  if (table.schema != expected_schema) {
    throw std::runtime_error("csv: schema mismatch in " + path.string() +
                             ": expected " + expected_schema + ", found " +
                             table.schema);
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const std::string& schema,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream stream(path);
  if (!stream) throw std::runtime_error("csv: cannot write " + path.string());
  stream << "# " << schema << "\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    stream << header[i] << (i + 1 < header.size() ? "," : "");
  }
  stream << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      stream << row[i] << (i + 1 < row.size() ? "," : "");
    }
    stream << "\n";
  }
}

void write_trials_csv(const std::filesystem::path& path,
                      const std::vector<TrialRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const TrialRecord& r : records) {
    rows.push_back({
        std::to_string(r.trial),
        r.ok ? "ok" : "failed",
        format_cell(r.components.c1),
        format_cell(r.components.c3),
        format_cell(r.components.l2),
        format_cell(r.components.l4),
        format_cell(r.components.rs),
        format_cell(r.components.rl),
        format_cell(r.rmse_uncalibrated),
        format_cell(r.rmse_calibrated),
        format_cell(r.snr_nominal_db),
        format_cell(r.snr_oracle_db),
        format_cell(r.snr_calibrated_db),
        r.branch,
        format_cell(r.calibration_residual),
        std::to_string(r.truncated_rows),
        std::to_string(r.retained_rows),
        std::to_string(r.calibration_sample_count),
        r.error,
    });
  }
  write_csv(path, kTrialsSchema,
            {"trial", "status", "c1_f", "c3_f", "l2_h", "l4_h", "rs_ohm", "rl_ohm",
             "rmse_uncalibrated", "rmse_calibrated", "snr_nominal_db",
             "snr_oracle_db", "snr_calibrated_db", "branch", "calibration_residual",
             "truncated_rows", "retained_rows", "calibration_samples", "error"},
            rows);
}

void write_timings_csv(const std::filesystem::path& path,
                       const std::vector<TrialRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const TrialRecord& r : records) {
    rows.push_back({
        std::to_string(r.trial),
        format_cell(r.t_sample_s),
        format_cell(r.t_solve_nominal_s),
        format_cell(r.t_solve_oracle_s),
        format_cell(r.t_calibrate_s),
        format_cell(r.t_solve_calibrated_s),
    });
  }
  write_csv(path, kTimingsSchema,
            {"trial", "t_sample_s", "t_solve_nominal_s", "t_solve_oracle_s",
             "t_calibrate_s", "t_solve_calibrated_s"},
            rows);
}

void write_benchmark_csv(const std::filesystem::path& path,
                         const std::vector<BenchmarkRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const BenchmarkRecord& r : records) {
    rows.push_back({
        std::to_string(r.trial),
        r.ok ? "ok" : "failed",
        format_cell(r.rmse_uncalibrated),
        format_cell(r.rmse_mbc),
        format_cell(r.rmse_dftti),
        format_cell(r.snr_nominal_db),
        format_cell(r.snr_oracle_db),
        format_cell(r.snr_mbc_db),
        format_cell(r.snr_dftti_db),
        format_cell(r.t_mbc_s),
        format_cell(r.t_dftti_s),
        std::to_string(r.samples_mbc),
        std::to_string(r.samples_dftti),
        r.error,
    });
  }
  write_csv(path, kBenchmarkSchema,
            {"trial", "status", "rmse_uncalibrated", "rmse_mbc", "rmse_dftti",
             "snr_nominal_db", "snr_oracle_db", "snr_mbc_db", "snr_dftti_db",
             "t_mbc_s", "t_dftti_s", "samples_mbc", "samples_dftti", "error"},
            rows);
}

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<MqSweepCell>& cells) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(cells.size());
  for (const MqSweepCell& c : cells) {
    rows.push_back({
        std::to_string(c.mq),
        std::to_string(c.k),
        std::to_string(c.trials),
        format_cell(c.mean_rmse_calibrated),
        format_cell(c.mean_rmse_uncalibrated),
        format_cell(c.mean_calibrate_seconds),
        std::to_string(c.tikhonov_count),
    });
  }
  write_csv(path, kSweepSchema,
            {"mq", "k", "trials", "mean_rmse_calibrated", "mean_rmse_uncalibrated",
             "mean_calibrate_s", "tikhonov_count"},
            rows);
}

void write_impulse_csv(const std::filesystem::path& path, const ImpulseResponse& h) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(h.samples.size());
  for (std::size_t i = 0; i < h.samples.size(); ++i) {
    rows.push_back({std::to_string(i), format_cell(h.samples[i])});
  }
  write_csv(path, kImpulseSchema, {"index", "value"}, rows);
}

void write_series_csv(const std::filesystem::path& path,
                      const Eigen::VectorXd& values) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    rows.push_back({std::to_string(i), format_cell(values(i))});
  }
  write_csv(path, kSeriesSchema, {"index", "value"}, rows);
}

void write_impulse_set_csv(const std::filesystem::path& path,
                           const ImpulseResponse& nominal,
                           const std::vector<ImpulseResponse>& realized) {
  std::vector<std::string> header{"index", "nominal"};
  for (std::size_t s = 0; s < realized.size(); ++s) {
    header.push_back("realized_" + std::to_string(s));
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(nominal.samples.size());
  for (std::size_t i = 0; i < nominal.samples.size(); ++i) {
    std::vector<std::string> row{std::to_string(i), format_cell(nominal.samples[i])};
    for (const ImpulseResponse& h : realized) {
      row.push_back(i < h.samples.size() ? format_cell(h.samples[i]) : "");
    }
    rows.push_back(std::move(row));
  }
  write_csv(path, kImpulseSetSchema, header, rows);
}

void write_bpdn_trace_csv(const std::filesystem::path& path,
                          const BpdnResult& result) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(result.trace.size());
  for (const BpdnTracePoint& point : result.trace) {
    rows.push_back({std::to_string(point.iteration),
                    format_cell(point.residual_norm), format_cell(point.one_norm),
                    point.radius_update ? "1" : "0"});
  }
  write_csv(path, kTraceSchema,
            {"iteration", "residual_norm", "one_norm", "radius_update"}, rows);
}

}  // namespace rdcalib
