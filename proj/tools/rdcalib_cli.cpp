// Command-line front end: runs the Monte-Carlo studies from a JSON
// configuration, persists CSV/JSON results with a replayable manifest, and
// emits plot-data files from persisted results.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/calibrate.hpp"
#include "rdcalib/config.hpp"
#include "rdcalib/csv.hpp"
#include "rdcalib/discretize.hpp"
#include "rdcalib/errors.hpp"
#include "rdcalib/experiments.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/lc_ladder.hpp"
#include "rdcalib/linear_operator.hpp"
#include "rdcalib/random.hpp"
#include "rdcalib/rd_model.hpp"
#include "rdcalib/version.hpp"

namespace {

using namespace rdcalib;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  char buffer[32];
  std::tm parts{};
  gmtime_r(&now, &parts);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  double acc = 0.0;
  for (double v : values) acc += v;
  return acc / static_cast<double>(values.size());
}

void collect(std::vector<double>& into, double value) {
  if (std::isfinite(value)) into.push_back(value);
}

std::string json_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream stream(path);
  if (!stream) throw std::runtime_error("cannot write " + path.string());
  stream << text << "\n";
}

struct StudyOutputs {
  std::vector<std::string> outputs;  // "file:schema"
  std::string summary_json;
};

StudyOutputs run_trial_study(const ExperimentConfig& config, const fs::path& out_dir) {
  const auto records = config.study == StudyKind::kPerturbation
                           ? run_perturbation_study(config)
                           : run_calibration_study(config);
  write_trials_csv(out_dir / "trials.csv", records);
  write_timings_csv(out_dir / "timings.csv", records);

  // impulse-response set for the response-cloud figure
  const int series = std::min<int>(32, config.trials);
  std::vector<ImpulseResponse> realized;
  realized.reserve(static_cast<std::size_t>(series));
  for (int trial = 0; trial < series; ++trial) {
    try {
      realized.push_back(trial_perturbed_response(config, trial));
    } catch (const std::exception&) {
      // draws that produced invalid components are simply absent from the plot
    }
  }
  write_impulse_set_csv(out_dir / "impulses.csv", nominal_model_response(config),
                        realized);

  // the study's input signal, and for calibration studies the first trial's
  // calibration artifacts
  const MultitoneSignal input = generate_multitone(
      config.signal.k_input, derive_seed(config.seed, 2, 0),
      config.dims.grid_rate_hz, config.dims.duration_s);
  write_series_csv(out_dir / "input_signal.csv", input.samples);
  bool wrote_calibration = false;
  if (config.study == StudyKind::kCalibration) {
    for (int trial = 0; trial < config.trials && !wrote_calibration; ++trial) {
      try {
        const SingleTrialCalibration single = calibrate_single_trial(config, trial);
        write_text(out_dir / "calibration_trial.json",
                   calibration_result_to_json_text(single.result));
        write_impulse_csv(out_dir / "calibrated_impulse.csv",
                          single.result.calibrated);
        wrote_calibration = true;
      } catch (const std::exception&) {
        // trial with invalid component draw; try the next one
      }
    }
  }

  std::vector<double> rmse_uncal, rmse_cal, snr_nominal, snr_oracle, snr_cal;
  int failed = 0, ls_branch = 0, improved = 0;
  for (const auto& record : records) {
    if (!record.ok) {
      ++failed;
      continue;
    }
    collect(rmse_uncal, record.rmse_uncalibrated);
    collect(rmse_cal, record.rmse_calibrated);
    collect(snr_nominal, record.snr_nominal_db);
    collect(snr_oracle, record.snr_oracle_db);
    collect(snr_cal, record.snr_calibrated_db);
    if (record.branch == "least-squares") ++ls_branch;
    if (std::isfinite(record.rmse_calibrated) &&
        record.rmse_calibrated <= record.rmse_uncalibrated) {
      ++improved;
    }
  }
  const double mean_uncal = mean_of(rmse_uncal);
  const double mean_cal = mean_of(rmse_cal);
  const double reduction = mean_cal > 0.0 ? mean_uncal / mean_cal
                                          : std::numeric_limits<double>::quiet_NaN();

  std::string summary = "{\n";
  summary += "  \"study\": \"" + to_string(config.study) + "\",\n";
  summary += "  \"trials\": " + std::to_string(records.size()) + ",\n";
  summary += "  \"failed_trials\": " + std::to_string(failed) + ",\n";
  summary += "  \"least_squares_branch_trials\": " + std::to_string(ls_branch) + ",\n";
  summary += "  \"improved_trials\": " + std::to_string(improved) + ",\n";
  summary += "  \"mean_rmse_uncalibrated\": " + json_number(mean_uncal) + ",\n";
  summary += "  \"mean_rmse_calibrated\": " + json_number(mean_cal) + ",\n";
  summary += "  \"median_rmse_uncalibrated\": " + json_number(median_of(rmse_uncal)) + ",\n";
  summary += "  \"median_rmse_calibrated\": " + json_number(median_of(rmse_cal)) + ",\n";
  summary += "  \"rmse_reduction_factor\": " + json_number(reduction) + ",\n";
  summary += "  \"mean_snr_nominal_db\": " + json_number(mean_of(snr_nominal)) + ",\n";
  summary += "  \"mean_snr_oracle_db\": " + json_number(mean_of(snr_oracle)) + ",\n";
  summary += "  \"mean_snr_calibrated_db\": " + json_number(mean_of(snr_cal)) + ",\n";
  summary += "  \"median_snr_nominal_db\": " + json_number(median_of(snr_nominal)) + ",\n";
  summary += "  \"median_snr_calibrated_db\": " + json_number(median_of(snr_cal)) + ",\n";
  summary += "  \"calibration_samples_per_trial\": " +
             std::to_string(config.study == StudyKind::kCalibration
                                ? config.calibration_samples
                                : 0) +
             "\n}";

  StudyOutputs out;
  out.outputs = {std::string("trials.csv:") + kTrialsSchema,
                 std::string("timings.csv:") + kTimingsSchema,
                 std::string("impulses.csv:") + kImpulseSetSchema,
                 std::string("input_signal.csv:") + kSeriesSchema};
  if (wrote_calibration) {
    out.outputs.emplace_back("calibration_trial.json:json");
    out.outputs.emplace_back(std::string("calibrated_impulse.csv:") + kImpulseSchema);
  }
  out.summary_json = summary;
  return out;
}

StudyOutputs run_sweep_study(const ExperimentConfig& config, const fs::path& out_dir) {
  const auto cells = run_mq_sweep(config);
  write_sweep_csv(out_dir / "sweep.csv", cells);
  std::string summary = "{\n  \"study\": \"mq-sweep\",\n  \"cells\": [\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    summary += "    {\"mq\": " + std::to_string(cells[i].mq) +
               ", \"k\": " + std::to_string(cells[i].k) +
               ", \"mean_rmse_calibrated\": " +
               json_number(cells[i].mean_rmse_calibrated) + "}";
    summary += (i + 1 < cells.size()) ? ",\n" : "\n";
  }
  summary += "  ]\n}";
  StudyOutputs out;
  out.outputs = {std::string("sweep.csv:") + kSweepSchema};
  out.summary_json = summary;
  return out;
}

StudyOutputs run_benchmark_study(const ExperimentConfig& config, const fs::path& out_dir) {
  const auto records = run_benchmark(config);
  write_benchmark_csv(out_dir / "benchmark.csv", records);

  std::vector<double> time_ratio, rmse_mbc, rmse_dftti;
  long samples_mbc = 0, samples_dftti = 0;
  int dftti_not_worse = 0, ok_count = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok_count;
    if (record.t_mbc_s > 0.0) time_ratio.push_back(record.t_dftti_s / record.t_mbc_s);
    collect(rmse_mbc, record.rmse_mbc);
    collect(rmse_dftti, record.rmse_dftti);
    samples_mbc = record.samples_mbc;
    samples_dftti = record.samples_dftti;
    if (record.rmse_dftti <= record.rmse_mbc) ++dftti_not_worse;
  }
  std::string summary = "{\n  \"study\": \"benchmark\",\n";
  summary += "  \"trials\": " + std::to_string(records.size()) + ",\n";
  summary += "  \"samples_mbc\": " + std::to_string(samples_mbc) + ",\n";
  summary += "  \"samples_dftti\": " + std::to_string(samples_dftti) + ",\n";
  summary += "  \"mean_time_ratio_dftti_over_mbc\": " + json_number(mean_of(time_ratio)) + ",\n";
  summary += "  \"mean_rmse_mbc\": " + json_number(mean_of(rmse_mbc)) + ",\n";
  summary += "  \"mean_rmse_dftti\": " + json_number(mean_of(rmse_dftti)) + ",\n";
  summary += "  \"dftti_not_worse_trials\": " + std::to_string(dftti_not_worse) + ",\n";
  summary += "  \"ok_trials\": " + std::to_string(ok_count) + "\n}";
  StudyOutputs out;
  out.outputs = {std::string("benchmark.csv:") + kBenchmarkSchema};
  out.summary_json = summary;
  return out;
}

void write_diagnostic_trace(const ExperimentConfig& config, const fs::path& path) {
  // One deterministic reconstruction against the nominal model, for
  // convergence plots.
  ExperimentConfig probe = config;
  probe.study = StudyKind::kPerturbation;
  const int n = probe.grid_length();
  const auto chipping = generate_chipping(n, derive_seed(probe.seed, 1, 0));
  const auto input = generate_multitone(probe.signal.k_input,
                                        derive_seed(probe.seed, 2, 0),
                                        probe.dims.grid_rate_hz, probe.dims.duration_s);
  const ImpulseResponse model = nominal_model_response(probe);
  const RdSystem system = make_rd_system(chipping, model, probe.dims.subsampling_ratio);
  const Eigen::VectorXd measured = apply_phi(system, input.samples);
  const FourierDictionary dictionary(n);
  const RdSynthesisOperator op(system, &dictionary);
  BpdnConfig bpdn;
  bpdn.zeta = probe.solver.zeta_relative * measured.norm();
  bpdn.max_iterations = probe.solver.max_iterations;
  bpdn.optimality_tolerance = probe.solver.optimality_tolerance;
  const BpdnResult result = solve_bpdn(op, measured.cast<std::complex<double>>(), bpdn);
  write_bpdn_trace_csv(path, result);
}

int command_run(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed_override,
                std::optional<int> trials_override,
                std::optional<std::string> study_override,
                std::optional<int> threads_override,
                const std::string& trace_path) {
  ExperimentConfig config = load_config(config_path);
  if (seed_override) config.seed = *seed_override;
  if (trials_override) config.trials = *trials_override;
  if (study_override) config.study = study_from_string(*study_override);
  if (threads_override) config.threads = *threads_override;
  config.validate();

  const fs::path out(out_dir);
  fs::create_directories(out);

  RunManifest manifest;
  manifest.tool_version = kVersion;
  manifest.config_hash = config_hash(config);
  manifest.resolved_config_json = config_to_json_text(config);
  manifest.master_seed = config.seed;
  manifest.started_utc = utc_now();

  StudyOutputs outputs;
  switch (config.study) {
    case StudyKind::kPerturbation:
    case StudyKind::kCalibration:
      outputs = run_trial_study(config, out);
      break;
    case StudyKind::kMqSweep:
      outputs = run_sweep_study(config, out);
      break;
    case StudyKind::kBenchmark:
      outputs = run_benchmark_study(config, out);
      break;
  }

  write_text(out / "summary.json", outputs.summary_json);
  outputs.outputs.emplace_back("summary.json:json");

  if (!trace_path.empty()) {
    write_diagnostic_trace(config, trace_path);
    outputs.outputs.emplace_back(fs::path(trace_path).filename().string() +
                                 std::string(":") + kTraceSchema);
  }

  manifest.finished_utc = utc_now();
  manifest.outputs = outputs.outputs;
  write_manifest(out / "manifest.json", manifest);
  std::cout << "wrote " << (out / "manifest.json").string() << "\n";
  return kExitOk;
}

// ---- plot-data emission ----

struct Histogram {
  std::vector<double> edges;  // bins + 1
  std::vector<std::vector<long>> counts;
};

Histogram make_histogram(const std::vector<std::vector<double>>& series, int bins) {
  Histogram histogram;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& values : series) {
    for (double v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) return histogram;
  if (lo == hi) hi = lo + 1.0;
  histogram.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b) {
    histogram.edges[static_cast<std::size_t>(b)] = lo + (hi - lo) * b / bins;
  }
  histogram.counts.assign(series.size(), std::vector<long>(static_cast<std::size_t>(bins), 0));
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (double v : series[s]) {
      int bin = static_cast<int>((v - lo) / (hi - lo) * bins);
      bin = std::clamp(bin, 0, bins - 1);
      ++histogram.counts[s][static_cast<std::size_t>(bin)];
    }
  }
  return histogram;
}

std::vector<double> finite_column(const CsvTable& table, const std::string& name) {
  std::vector<double> values;
  const int col = table.column(name);
  if (col < 0) return values;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const double v = table.number(row, col);
    if (std::isfinite(v)) values.push_back(v);
  }
  return values;
}

int emit_histogram_figure(const CsvTable& table, const fs::path& out_path,
                          const std::vector<std::pair<std::string, std::string>>& columns) {
  std::vector<std::vector<double>> series;
  std::vector<std::string> header{"bin_left", "bin_right"};
  for (const auto& [column, label] : columns) {
    series.push_back(finite_column(table, column));
    header.push_back("count_" + label);
  }
  const Histogram histogram = make_histogram(series, 40);
  std::vector<std::vector<std::string>> rows;
  if (!histogram.edges.empty()) {
    const std::size_t bins = histogram.edges.size() - 1;
    for (std::size_t b = 0; b < bins; ++b) {
      std::vector<std::string> row{format_cell(histogram.edges[b]),
                                   format_cell(histogram.edges[b + 1])};
      for (const auto& counts : histogram.counts) {
        row.push_back(std::to_string(counts[b]));
      }
      rows.push_back(std::move(row));
    }
  } else {
    std::cerr << "warning: no finite values to bin; writing empty plot data\n";
  }
  write_csv(out_path, kPlotSchema, header, rows);
  std::cout << "wrote " << out_path.string() << "\n";
  return kExitOk;
}

int command_plot(const std::string& results_dir, const std::string& figure,
                 const std::string& out_dir) {
  const fs::path results(results_dir);
  const fs::path out = out_dir.empty() ? results : fs::path(out_dir);
  fs::create_directories(out);

  if (figure == "impulse-responses") {
    const CsvTable table = read_csv(results / "impulses.csv", kImpulseSetSchema);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
      for (std::size_t col = 1; col < table.header.size(); ++col) {
        if (table.rows[row].size() <= col || table.rows[row][col].empty()) continue;
        rows.push_back({table.header[col], table.rows[row][0], table.rows[row][col]});
      }
    }
    if (rows.empty()) std::cerr << "warning: empty impulse set\n";
    write_csv(out / "plot_impulse_responses.csv", kPlotSchema,
              {"series", "index", "value"}, rows);
    std::cout << "wrote " << (out / "plot_impulse_responses.csv").string() << "\n";
    return kExitOk;
  }
  if (figure == "snr-histogram") {
    const CsvTable table = read_csv(results / "trials.csv", kTrialsSchema);
    return emit_histogram_figure(table, out / "plot_snr_histogram.csv",
                                 {{"snr_nominal_db", "nominal"},
                                  {"snr_oracle_db", "oracle"},
                                  {"snr_calibrated_db", "calibrated"}});
  }
  if (figure == "rmse-histogram") {
    const CsvTable table = read_csv(results / "trials.csv", kTrialsSchema);
    return emit_histogram_figure(table, out / "plot_rmse_histogram.csv",
                                 {{"rmse_uncalibrated", "uncalibrated"},
                                  {"rmse_calibrated", "calibrated"}});
  }
  if (figure == "mq-sweep") {
    const CsvTable table = read_csv(results / "sweep.csv", kSweepSchema);
    std::vector<std::vector<std::string>> rows;
    const int mq_col = table.column("mq");
    const int k_col = table.column("k");
    const int rmse_col = table.column("mean_rmse_calibrated");
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
      rows.push_back({table.rows[row][static_cast<std::size_t>(mq_col)],
                      table.rows[row][static_cast<std::size_t>(k_col)],
                      table.rows[row][static_cast<std::size_t>(rmse_col)]});
    }
    if (rows.empty()) std::cerr << "warning: empty sweep results\n";
    write_csv(out / "plot_mq_sweep.csv", kPlotSchema,
              {"mq", "k", "mean_rmse_calibrated"}, rows);
    std::cout << "wrote " << (out / "plot_mq_sweep.csv").string() << "\n";
    return kExitOk;
  }
  if (figure == "benchmark") {
    const CsvTable table = read_csv(results / "benchmark.csv", kBenchmarkSchema);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
      rows.push_back({std::to_string(row),
                      table.rows[row][static_cast<std::size_t>(table.column("rmse_uncalibrated"))],
                      table.rows[row][static_cast<std::size_t>(table.column("rmse_mbc"))],
                      table.rows[row][static_cast<std::size_t>(table.column("rmse_dftti"))],
                      table.rows[row][static_cast<std::size_t>(table.column("snr_nominal_db"))],
                      table.rows[row][static_cast<std::size_t>(table.column("snr_oracle_db"))],
                      table.rows[row][static_cast<std::size_t>(table.column("snr_mbc_db"))],
                      table.rows[row][static_cast<std::size_t>(table.column("snr_dftti_db"))]});
    }
    if (rows.empty()) std::cerr << "warning: empty benchmark results\n";
    write_csv(out / "plot_benchmark.csv", kPlotSchema,
              {"rank", "rmse_uncalibrated", "rmse_mbc", "rmse_dftti",
               "snr_nominal_db", "snr_oracle_db", "snr_mbc_db", "snr_dftti_db"},
              rows);
    std::cout << "wrote " << (out / "plot_benchmark.csv").string() << "\n";
    return kExitOk;
  }
  throw ConfigError("unknown figure: " + figure);
}

int command_show_system(const std::string& config_path) {
  const ExperimentConfig config = load_config(config_path);
  const int n = config.grid_length();
  const int m = config.measurement_count();
  const double f_s = config.dims.grid_rate_hz / config.dims.subsampling_ratio;
  std::printf("study:                 %s\n", to_string(config.study).c_str());
  std::printf("front end:             %s\n", to_string(config.front_end).c_str());
  std::printf("grid rate f_N:         %.6g Hz\n", config.dims.grid_rate_hz);
  std::printf("duration T:            %.6g s\n", config.dims.duration_s);
  std::printf("grid length N:         %d\n", n);
  std::printf("measurements M:        %d\n", m);
  std::printf("subsampling ratio R:   %d\n", config.dims.subsampling_ratio);
  std::printf("output rate f_s:       %.6g Hz\n", f_s);
  std::printf("calibration samples:   %d\n", config.calibration_samples);
  std::printf("master seed:           %llu\n",
              static_cast<unsigned long long>(config.seed));

  if (config.front_end == FrontEnd::kAccumulateDump) {
    const auto h = accumulate_and_dump_response(config.dims.subsampling_ratio);
    std::printf("impulse response:      flat unity, length R = %d\n", h.length());
    return kExitOk;
  }

  const LcComponents components = synthesize_nominal(
      config.front_end == FrontEnd::kButterworth ? FilterApproximation::kButterworth
                                                 : FilterApproximation::kChebyshev);
  const RationalTransferFunction analog = lc_transfer_function(components);
  std::printf("components:            C1=%.6g F  C3=%.6g F  L2=%.6g H  L4=%.6g H  Rs=%.6g ohm  Rl=%.6g ohm\n",
              components.c1, components.c3, components.l2, components.l4,
              components.rs, components.rl);
  std::printf("analog numerator:      %.9g\n", analog.numerator[0]);
  std::printf("analog denominator:   ");
  for (double beta : analog.denominator) std::printf(" %.9g", beta);
  std::printf("\n");
  std::printf("dc gain:               %.9g\n",
              std::abs(analog.evaluate_s({0.0, 0.0})));

  const double rate = config.discretization.rate_hz > 0.0
                          ? config.discretization.rate_hz
                          : config.dims.grid_rate_hz;
  std::printf("discretization rate:   %.6g Hz%s\n", rate,
              config.discretization.rate_hz > 0.0 ? "" : " (grid rate)");
  const ImpulseResponse model = nominal_model_response(config);
  std::printf("impulse length L:      %d%s\n", model.length(),
              config.dims.impulse_length == 0 ? " (energy rule)" : "");
  std::printf("impulse response head:");
  for (int l = 0; l < std::min(8, model.length()); ++l) {
    std::printf(" %.6g", model.samples[static_cast<std::size_t>(l)]);
  }
  std::printf(" ...\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-demodulator simulation and calibration toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, results_dir, figure, plot_out, trace_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> trials_override, threads_override;
  std::optional<std::string> study_override;

  CLI::App* run = app.add_subcommand("run", "execute a study from a JSON config");
  run->add_option("--config", config_path, "configuration file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--seed", seed_override, "override the master seed");
  run->add_option("--trials", trials_override, "override the trial count");
  run->add_option("--study", study_override,
                  "override the study (perturbation|calibration|mq-sweep|benchmark)");
  run->add_option("--threads", threads_override, "worker threads (0 = auto)");
  run->add_option("--solver-trace", trace_path,
                  "write one diagnostic solver trace to this CSV path");

  CLI::App* plot = app.add_subcommand("plot", "emit plot-data files from results");
  plot->add_option("--results", results_dir, "results directory of a previous run")
      ->required();
  plot->add_option("--figure", figure,
                   "impulse-responses|snr-histogram|rmse-histogram|mq-sweep|benchmark")
      ->required();
  plot->add_option("--out", plot_out, "output directory (default: results dir)");

  CLI::App* show = app.add_subcommand("show-system", "print the resolved system");
  show->add_option("--config", config_path, "configuration file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return command_run(config_path, out_dir, seed_override, trials_override,
                         study_override, threads_override, trace_path);
    }
    if (plot->parsed()) {
      return command_plot(results_dir, figure, plot_out);
    }
    if (show->parsed()) {
      return command_show_system(config_path);
    }
  } catch (const ConfigError& failure) {
    std::cerr << "configuration error: " << failure.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
