#include "rdcalib/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdcalib/calibrate.hpp"
#include "rdcalib/discretize.hpp"
#include "rdcalib/errors.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/linear_operator.hpp"
#include "rdcalib/parallel.hpp"
#include "rdcalib/random.hpp"

namespace rdcalib {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Seed substreams; trial indices select the per-trial state within each.
constexpr std::uint64_t kStreamChipping = 1;
constexpr std::uint64_t kStreamInputSignal = 2;
constexpr std::uint64_t kStreamComponents = 3;
constexpr std::uint64_t kStreamCalibChipping = 4;
constexpr std::uint64_t kStreamCalibSignal = 5;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

StudyKind study_from_string(const std::string& name) {
  if (name == "perturbation") return StudyKind::kPerturbation;
  if (name == "calibration") return StudyKind::kCalibration;
  if (name == "mq-sweep") return StudyKind::kMqSweep;
  if (name == "benchmark") return StudyKind::kBenchmark;
  throw ConfigError("unknown study: " + name);
}

std::string to_string(StudyKind study) {
  switch (study) {
    case StudyKind::kPerturbation: return "perturbation";
    case StudyKind::kCalibration: return "calibration";
    case StudyKind::kMqSweep: return "mq-sweep";
    case StudyKind::kBenchmark: return "benchmark";
  }
  throw std::invalid_argument("unknown study enum value");
}

FrontEnd front_end_from_string(const std::string& name) {
  if (name == "butterworth") return FrontEnd::kButterworth;
  if (name == "chebyshev") return FrontEnd::kChebyshev;
  if (name == "accumulate-dump") return FrontEnd::kAccumulateDump;
  throw ConfigError("unknown front end: " + name);
}

std::string to_string(FrontEnd front_end) {
  switch (front_end) {
    case FrontEnd::kButterworth: return "butterworth";
    case FrontEnd::kChebyshev: return "chebyshev";
    case FrontEnd::kAccumulateDump: return "accumulate-dump";
  }
  throw std::invalid_argument("unknown front end enum value");
}

int ExperimentConfig::grid_length() const {
  return static_cast<int>(std::llround(dims.grid_rate_hz * dims.duration_s));
}

int ExperimentConfig::measurement_count() const {
  return grid_length() / dims.subsampling_ratio;
}

void ExperimentConfig::validate() const {
  tolerance.validate();
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (!(dims.grid_rate_hz > 0.0) || !(dims.duration_s > 0.0)) {
    throw ConfigError("config: grid rate and duration must be positive");
  }
  if (dims.subsampling_ratio < 1) {
    throw ConfigError("config: subsampling ratio must be >= 1");
  }
  const int n = grid_length();
  if (n < 1 || n % dims.subsampling_ratio != 0) {
    throw ConfigError("config: N = grid_rate * duration must be a positive multiple of R");
  }
  if (dims.impulse_length < 0 || dims.impulse_length > n) {
    throw ConfigError("config: impulse length must be in [0, N]");
  }
  if (signal.k_input < 1 || signal.k_calibration < 1) {
    throw ConfigError("config: tone counts must be >= 1");
  }
  if (calibration_samples < 1) {
    throw ConfigError("config: calibration_samples must be >= 1");
  }
  if (study == StudyKind::kMqSweep && (mq_list.empty() || k_list.empty())) {
    throw ConfigError("config: mq-sweep needs mq_list and k_list");
  }
  for (int mq : mq_list) {
    if (mq < 1) throw ConfigError("config: mq_list entries must be >= 1");
  }
  for (int k : k_list) {
    if (k < 1) throw ConfigError("config: k_list entries must be >= 1");
  }
  if (solver.max_iterations < 1) {
    throw ConfigError("config: solver iterations must be >= 1");
  }
  if (!(solver.zeta_relative >= 0.0)) {
    throw ConfigError("config: zeta_relative must be >= 0");
  }
}

double rmse(const ImpulseResponse& a, const ImpulseResponse& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("rmse: impulse responses must have equal length");
  }
  double acc = 0.0;
  for (int i = 0; i < a.length(); ++i) {
    const double d = a.samples[static_cast<std::size_t>(i)] -
                     b.samples[static_cast<std::size_t>(i)];
    acc += d * d;
  }
  return std::sqrt(acc / a.length());
}

double rmse(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("rmse: vectors must have equal length");
  }
  return (a - b).norm() / std::sqrt(static_cast<double>(a.size()));
}

double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate) {
  if (reference.size() != estimate.size()) {
    throw std::invalid_argument("snr_db: vectors must have equal length");
  }
  const double ref_norm = reference.norm();
  if (!(ref_norm > 0.0)) {
    throw std::invalid_argument("snr_db: zero reference signal");
  }
  const double err_norm = (reference - estimate).norm();
  constexpr double kSentinelDb = 300.0;
  if (err_norm == 0.0) return kSentinelDb;
  return std::min(kSentinelDb, 20.0 * std::log10(ref_norm / err_norm));
}

namespace {

// Resolved per-study state shared across trials.
struct StudySetup {
  ExperimentConfig config;
  int n = 0;
  int m = 0;
  LcComponents nominal_components;
  double discretization_rate_hz = 0.0;
  int impulse_length = 0;          // L
  ImpulseResponse nominal_model;   // L taps
  std::vector<LcPart> perturb_set;
};

PoleResidueForm discretize_lc(const LcComponents& components, double rate_hz,
                              double prewarp_hz) {
  const RationalTransferFunction analog = lc_transfer_function(components);
  const RationalTransferFunction discrete =
      bilinear_transform(analog, rate_hz, prewarp_hz);
  return partial_fractions(discrete);
}

// Length at which the remaining tail is negligible (relative tail norm below
// 1e-12), probed up to `cap` samples. This stands in for the infinitely long
// realized response when simulating the actual front end.
int tail_complete_length(const PoleResidueForm& form, int cap) {
  const ImpulseResponse h = impulse_response(form, cap);
  std::vector<double> suffix(h.samples.size() + 1, 0.0);
  for (int i = static_cast<int>(h.samples.size()) - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] +
        h.samples[static_cast<std::size_t>(i)] * h.samples[static_cast<std::size_t>(i)];
  }
  const double total = suffix[0];
  if (!(total > 0.0)) return 1;
  const double bound = 1e-24 * total;
  for (std::size_t len = 1; len <= h.samples.size(); ++len) {
    if (suffix[len] <= bound) return static_cast<int>(len);
  }
  return cap;
}

ImpulseResponse truncate_response(const ImpulseResponse& h, int length) {
  ImpulseResponse out;
  out.sample_rate_hz = h.sample_rate_hz;
  out.samples.assign(h.samples.begin(), h.samples.begin() + length);
  return out;
}

StudySetup make_setup(const ExperimentConfig& config) {
  config.validate();
  if (config.front_end == FrontEnd::kAccumulateDump) {
    throw ConfigError(
        "config: the accumulate-dump front end has no component tolerances to "
        "study; use it with show-system");
  }
  StudySetup setup;
  setup.config = config;
  setup.n = config.grid_length();
  setup.m = config.measurement_count();
  setup.perturb_set = config.perturb_set;
  if (setup.perturb_set.empty()) {
    setup.perturb_set.assign(reactive_parts().begin(), reactive_parts().end());
  }
  setup.nominal_components = synthesize_nominal(
      config.front_end == FrontEnd::kButterworth ? FilterApproximation::kButterworth
                                                 : FilterApproximation::kChebyshev);
  setup.discretization_rate_hz = config.discretization.rate_hz > 0.0
                                     ? config.discretization.rate_hz
                                     : config.dims.grid_rate_hz;
  const PoleResidueForm nominal_form =
      discretize_lc(setup.nominal_components, setup.discretization_rate_hz,
                    config.discretization.prewarp_hz);
  setup.impulse_length =
      config.dims.impulse_length > 0
          ? config.dims.impulse_length
          : energy_rule_length(nominal_form, 1.0 - 1e-6, setup.n);
  setup.nominal_model = impulse_response(nominal_form, setup.impulse_length);
  return setup;
}

struct TrialSystems {
  LcComponents components;
  ImpulseResponse actual_full;  // tail-complete realized response
  ImpulseResponse oracle;       // its first L taps
};

TrialSystems make_trial_systems(const StudySetup& setup, int trial) {
  Rng rng(derive_seed(setup.config.seed, kStreamComponents,
                      static_cast<std::uint64_t>(trial)));
  TrialSystems out;
  out.components = perturb_components(setup.nominal_components,
                                      setup.config.tolerance, setup.perturb_set, rng);
  const PoleResidueForm form =
      discretize_lc(out.components, setup.discretization_rate_hz,
                    setup.config.discretization.prewarp_hz);
  const int full_len = std::max(setup.impulse_length,
                                tail_complete_length(form, setup.n));
  out.actual_full = impulse_response(form, full_len);
  out.oracle = truncate_response(out.actual_full, setup.impulse_length);
  return out;
}

double reconstruct_snr(const RdSystem& model, const FourierDictionary& dictionary,
                       const Eigen::VectorXd& measured,
                       const Eigen::VectorXd& reference,
                       const SolverSettings& solver) {
  const RdSynthesisOperator op(model, &dictionary);
  BpdnConfig cfg;
  cfg.zeta = solver.zeta_relative * measured.norm();
  cfg.max_iterations = solver.max_iterations;
  cfg.optimality_tolerance = solver.optimality_tolerance;
  const BpdnResult result =
      solve_bpdn(op, measured.cast<std::complex<double>>(), cfg);
  return snr_db(reference, dictionary.synthesize_real(result.coefficients));
}

struct CalibrationOutcome {
  CalibrationResult result;
  double rmse_calibrated = 0.0;
  long sample_count = 0;
  double seconds = 0.0;
};

// One calibration acquisition plus the error estimate. The calibration run
// has its own grid of N_q = M_q R samples, its own chipping, and samples the
// realized (tail-complete) front end.
CalibrationOutcome calibrate_trial(const StudySetup& setup,
                                   const TrialSystems& trial_systems, int trial,
                                   int m_q, int k_calibration,
                                   std::uint64_t signal_salt) {
  const int ratio = setup.config.dims.subsampling_ratio;
  const int n_q = m_q * ratio;
  const double grid_rate = setup.config.dims.grid_rate_hz;

  CalibrationOutcome out;
  Stopwatch watch;
  const ChippingSequence chipping_q = generate_chipping(
      n_q, derive_seed(setup.config.seed, kStreamCalibChipping,
                       static_cast<std::uint64_t>(trial)));
  const MultitoneSignal x_q = generate_multitone(
      k_calibration,
      derive_seed(setup.config.seed, kStreamCalibSignal,
                  static_cast<std::uint64_t>(trial) ^ signal_salt),
      grid_rate, n_q / grid_rate);

  const int actual_len = std::min(trial_systems.actual_full.length(), n_q);
  const RdSystem actual_q = make_rd_system(
      chipping_q, truncate_response(trial_systems.actual_full, actual_len), ratio);
  const Eigen::VectorXd measured = apply_phi(actual_q, x_q.samples);

  const int model_len = std::min(setup.impulse_length, n_q);
  const RdSystem model_q = make_rd_system(
      chipping_q, truncate_response(setup.nominal_model, model_len), ratio);

  out.result = mbc_calibrate({x_q, model_q, measured});
  out.seconds = watch.seconds();
  out.sample_count = m_q;
  ImpulseResponse oracle_q = trial_systems.oracle;
  if (oracle_q.length() > model_len) oracle_q = truncate_response(oracle_q, model_len);
  out.rmse_calibrated = rmse(out.result.calibrated, oracle_q);
  return out;
}

}  // namespace

SingleTrialCalibration calibrate_single_trial(const ExperimentConfig& config,
                                              int trial) {
  const StudySetup setup = make_setup(config);
  const TrialSystems systems = make_trial_systems(setup, trial);
  const CalibrationOutcome outcome =
      calibrate_trial(setup, systems, trial, config.calibration_samples,
                      config.signal.k_calibration, /*signal_salt=*/0);
  SingleTrialCalibration out;
  out.components = systems.components;
  out.rmse_uncalibrated = rmse(setup.nominal_model, systems.oracle);
  out.rmse_calibrated = outcome.rmse_calibrated;
  out.result = outcome.result;
  return out;
}

ImpulseResponse nominal_model_response(const ExperimentConfig& config) {
  return make_setup(config).nominal_model;
}

ImpulseResponse trial_perturbed_response(const ExperimentConfig& config, int trial) {
  const StudySetup setup = make_setup(config);
  return make_trial_systems(setup, trial).oracle;
}

std::vector<TrialRecord> run_perturbation_study(const ExperimentConfig& config) {
  const StudySetup setup = make_setup(config);
  const ChippingSequence chipping =
      generate_chipping(setup.n, derive_seed(config.seed, kStreamChipping, 0));
  const MultitoneSignal input = generate_multitone(
      config.signal.k_input, derive_seed(config.seed, kStreamInputSignal, 0),
      config.dims.grid_rate_hz, config.dims.duration_s);
  const FourierDictionary dictionary(setup.n);
  const RdSystem nominal_system =
      make_rd_system(chipping, setup.nominal_model, config.dims.subsampling_ratio);

  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads, [&](int trial) {
    TrialRecord& record = records[static_cast<std::size_t>(trial)];
    record.trial = trial;
    record.rmse_calibrated = kNaN;
    record.snr_calibrated_db = kNaN;
    try {
      const TrialSystems systems = make_trial_systems(setup, trial);
      record.components = systems.components;
      record.rmse_uncalibrated = rmse(setup.nominal_model, systems.oracle);

      Stopwatch sample_watch;
      const RdSystem actual =
          rebuild_system(nominal_system, systems.actual_full);
      const Eigen::VectorXd measured = apply_phi(actual, input.samples);
      record.t_sample_s = sample_watch.seconds();

      if (config.reconstruct) {
        Stopwatch nominal_watch;
        record.snr_nominal_db = reconstruct_snr(nominal_system, dictionary, measured,
                                                input.samples, config.solver);
        record.t_solve_nominal_s = nominal_watch.seconds();

        Stopwatch oracle_watch;
        const RdSystem oracle_system = rebuild_system(nominal_system, systems.oracle);
        record.snr_oracle_db = reconstruct_snr(oracle_system, dictionary, measured,
                                               input.samples, config.solver);
        record.t_solve_oracle_s = oracle_watch.seconds();
      } else {
        record.snr_nominal_db = kNaN;
        record.snr_oracle_db = kNaN;
      }
    } catch (const std::exception& failure) {
      record.ok = false;
      record.error = failure.what();
    }
  });
  return records;
}

std::vector<TrialRecord> run_calibration_study(const ExperimentConfig& config) {
  const StudySetup setup = make_setup(config);
  const ChippingSequence chipping =
      generate_chipping(setup.n, derive_seed(config.seed, kStreamChipping, 0));
  const MultitoneSignal input = generate_multitone(
      config.signal.k_input, derive_seed(config.seed, kStreamInputSignal, 0),
      config.dims.grid_rate_hz, config.dims.duration_s);
  const FourierDictionary dictionary(setup.n);
  const RdSystem nominal_system =
      make_rd_system(chipping, setup.nominal_model, config.dims.subsampling_ratio);

  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads, [&](int trial) {
    TrialRecord& record = records[static_cast<std::size_t>(trial)];
    record.trial = trial;
    try {
      const TrialSystems systems = make_trial_systems(setup, trial);
      record.components = systems.components;
      record.rmse_uncalibrated = rmse(setup.nominal_model, systems.oracle);

      Stopwatch sample_watch;
      const RdSystem actual =
          rebuild_system(nominal_system, systems.actual_full);
      const Eigen::VectorXd measured = apply_phi(actual, input.samples);
      record.t_sample_s = sample_watch.seconds();

      const CalibrationOutcome calibration = calibrate_trial(
          setup, systems, trial, config.calibration_samples,
          config.signal.k_calibration, /*signal_salt=*/0);
      record.rmse_calibrated = calibration.rmse_calibrated;
      record.branch = calibration.result.branch == CalibrationBranch::kLeastSquares
                          ? "least-squares"
                          : "tikhonov";
      record.calibration_residual = calibration.result.residual_norm;
      record.truncated_rows = calibration.result.truncated_rows;
      record.retained_rows = calibration.result.retained_rows;
      record.calibration_sample_count = calibration.sample_count;
      record.t_calibrate_s = calibration.seconds;

      if (config.reconstruct) {
        Stopwatch nominal_watch;
        record.snr_nominal_db = reconstruct_snr(nominal_system, dictionary, measured,
                                                input.samples, config.solver);
        record.t_solve_nominal_s = nominal_watch.seconds();

        Stopwatch calibrated_watch;
        const RdSystem calibrated_system =
            rebuild_system(nominal_system, calibration.result.calibrated);
        record.snr_calibrated_db = reconstruct_snr(
            calibrated_system, dictionary, measured, input.samples, config.solver);
        record.t_solve_calibrated_s = calibrated_watch.seconds();
        record.snr_oracle_db = kNaN;
      } else {
        record.snr_nominal_db = kNaN;
        record.snr_oracle_db = kNaN;
        record.snr_calibrated_db = kNaN;
      }
    } catch (const std::exception& failure) {
      record.ok = false;
      record.error = failure.what();
    }
  });
  return records;
}

std::vector<MqSweepCell> run_mq_sweep(const ExperimentConfig& config) {
  const StudySetup setup = make_setup(config);
  std::vector<MqSweepCell> cells;
  cells.reserve(config.mq_list.size() * config.k_list.size());

  for (std::size_t k_idx = 0; k_idx < config.k_list.size(); ++k_idx) {
    for (std::size_t mq_idx = 0; mq_idx < config.mq_list.size(); ++mq_idx) {
      const int k = config.k_list[k_idx];
      const int m_q = config.mq_list[mq_idx];
      // Salting the calibration-signal stream by K keeps tone draws
      // independent across K rows while pairing them across M_q columns.
      const std::uint64_t salt = static_cast<std::uint64_t>(k) << 32;

      MqSweepCell cell;
      cell.mq = m_q;
      cell.k = k;
      cell.trials = config.trials;
      std::vector<double> rmse_cal(static_cast<std::size_t>(config.trials));
      std::vector<double> rmse_uncal(static_cast<std::size_t>(config.trials));
      std::vector<double> seconds(static_cast<std::size_t>(config.trials));
      std::vector<int> tikhonov(static_cast<std::size_t>(config.trials), 0);
      parallel_for(config.trials, config.threads, [&](int trial) {
        const TrialSystems systems = make_trial_systems(setup, trial);
        rmse_uncal[static_cast<std::size_t>(trial)] =
            rmse(setup.nominal_model, systems.oracle);
        const CalibrationOutcome outcome =
            calibrate_trial(setup, systems, trial, m_q, k, salt);
        rmse_cal[static_cast<std::size_t>(trial)] = outcome.rmse_calibrated;
        seconds[static_cast<std::size_t>(trial)] = outcome.seconds;
        tikhonov[static_cast<std::size_t>(trial)] =
            outcome.result.branch == CalibrationBranch::kTikhonov ? 1 : 0;
      });
      for (int trial = 0; trial < config.trials; ++trial) {
        cell.mean_rmse_calibrated += rmse_cal[static_cast<std::size_t>(trial)];
        cell.mean_rmse_uncalibrated += rmse_uncal[static_cast<std::size_t>(trial)];
        cell.mean_calibrate_seconds += seconds[static_cast<std::size_t>(trial)];
        cell.tikhonov_count += tikhonov[static_cast<std::size_t>(trial)];
      }
      cell.mean_rmse_calibrated /= config.trials;
      cell.mean_rmse_uncalibrated /= config.trials;
      cell.mean_calibrate_seconds /= config.trials;
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<BenchmarkRecord> run_benchmark(const ExperimentConfig& config) {
  const StudySetup setup = make_setup(config);
  const ChippingSequence chipping =
      generate_chipping(setup.n, derive_seed(config.seed, kStreamChipping, 0));
  const MultitoneSignal input = generate_multitone(
      config.signal.k_input, derive_seed(config.seed, kStreamInputSignal, 0),
      config.dims.grid_rate_hz, config.dims.duration_s);
  const FourierDictionary dictionary(setup.n);
  const RdSystem nominal_system =
      make_rd_system(chipping, setup.nominal_model, config.dims.subsampling_ratio);

  std::vector<BenchmarkRecord> records(static_cast<std::size_t>(config.trials));
  // Serial trials: the probed dense matrix alone is M x N doubles.
  for (int trial = 0; trial < config.trials; ++trial) {
    BenchmarkRecord& record = records[static_cast<std::size_t>(trial)];
    record.trial = trial;
    try {
      const TrialSystems systems = make_trial_systems(setup, trial);
      record.rmse_uncalibrated = rmse(setup.nominal_model, systems.oracle);

      const RdSystem actual = rebuild_system(nominal_system, systems.actual_full);
      const Eigen::VectorXd measured = apply_phi(actual, input.samples);

      Stopwatch mbc_watch;
      const CalibrationOutcome mbc = calibrate_trial(
          setup, systems, trial, config.calibration_samples,
          config.signal.k_calibration, /*signal_salt=*/0);
      record.t_mbc_s = mbc_watch.seconds();
      record.rmse_mbc = mbc.rmse_calibrated;
      record.samples_mbc = mbc.sample_count;

      Stopwatch dftti_watch;
      const DfttiResult dftti = dftti_calibrate(
          [&actual](const Eigen::VectorXd& probe) { return apply_phi(actual, probe); },
          setup.n, setup.m);
      record.t_dftti_s = dftti_watch.seconds();
      record.samples_dftti = dftti.samples_used;
      const ImpulseResponse h_dftti =
          impulse_from_dense_phi(dftti.phi, chipping, config.dims.subsampling_ratio,
                                 setup.impulse_length);
      record.rmse_dftti = rmse(h_dftti, systems.oracle);

      if (config.reconstruct) {
        record.snr_nominal_db = reconstruct_snr(nominal_system, dictionary, measured,
                                                input.samples, config.solver);
        const RdSystem oracle_system = rebuild_system(nominal_system, systems.oracle);
        record.snr_oracle_db = reconstruct_snr(oracle_system, dictionary, measured,
                                               input.samples, config.solver);
        const RdSystem mbc_system =
            rebuild_system(nominal_system, mbc.result.calibrated);
        record.snr_mbc_db = reconstruct_snr(mbc_system, dictionary, measured,
                                            input.samples, config.solver);

        const DensePhiSynthesisOperator dftti_op(dftti.phi, &dictionary);
        BpdnConfig bpdn_cfg;
        bpdn_cfg.zeta = config.solver.zeta_relative * measured.norm();
        bpdn_cfg.max_iterations = config.solver.max_iterations;
        bpdn_cfg.optimality_tolerance = config.solver.optimality_tolerance;
        const BpdnResult dftti_recon =
            solve_bpdn(dftti_op, measured.cast<std::complex<double>>(), bpdn_cfg);
        record.snr_dftti_db =
            snr_db(input.samples, dictionary.synthesize_real(dftti_recon.coefficients));
      } else {
        record.snr_nominal_db = kNaN;
        record.snr_oracle_db = kNaN;
        record.snr_mbc_db = kNaN;
        record.snr_dftti_db = kNaN;
      }
    } catch (const std::exception& failure) {
      record.ok = false;
      record.error = failure.what();
    }
  }

  // Fig. 7 layout: trials ordered by the size of the initial model error.
  std::sort(records.begin(), records.end(),
            [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
              return a.rmse_uncalibrated < b.rmse_uncalibrated;
            });
  return records;
}

}  // namespace rdcalib
