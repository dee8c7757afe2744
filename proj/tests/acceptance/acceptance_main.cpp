// Acceptance suite: end-to-end checks of the toolkit at the standard
// acquisition dimensions (N = 12600, M = 1050, R = 12), printing one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/calibrate.hpp"
#include "rdcalib/discretize.hpp"
#include "rdcalib/experiments.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/lc_ladder.hpp"
#include "rdcalib/least_squares.hpp"
#include "rdcalib/linear_operator.hpp"
#include "rdcalib/random.hpp"
#include "rdcalib/rd_model.hpp"

using namespace rdcalib;

namespace {

constexpr std::uint64_t kShippedSeed = 20130301ULL;

struct Criterion {
  int id;
  std::string label;
  std::function<bool(std::string&)> run;
};

double elapsed_s(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

ExperimentConfig standard_config(FrontEnd front_end) {
  ExperimentConfig config;
  config.front_end = front_end;
  config.dims.grid_rate_hz = 12600.0;
  config.dims.duration_s = 1.0;
  config.dims.subsampling_ratio = 12;
  config.dims.impulse_length = front_end == FrontEnd::kChebyshev ? 228 : 108;
  config.signal.k_input = 5;
  config.signal.k_calibration = 10;
  config.seed = kShippedSeed;
  return config;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b, c);
  return buffer;
}

// --- criterion 1: matched-model reconstruction quality -----------------------

bool criterion_matched_baseline(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config = standard_config(FrontEnd::kButterworth);
  config.study = StudyKind::kPerturbation;
  config.trials = 20;
  const auto records = run_perturbation_study(config);
  int good = 0, ok = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    if (record.snr_oracle_db >= 80.0) ++good;
  }
  const double runtime = elapsed_s(start);
  detail = fmt("oracle SNR >= 80 dB on %.0f/%.0f trials, runtime %.1f s (< 300)",
               good, ok, runtime);
  return ok == 20 && good >= 18 && runtime < 300.0;
}

// --- criterion 2: perturbation damage without calibration --------------------

bool criterion_perturbation_damage(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config = standard_config(FrontEnd::kChebyshev);
  config.study = StudyKind::kPerturbation;
  config.trials = 50;
  const auto records = run_perturbation_study(config);
  double mean_nominal = 0.0;
  int ok = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    mean_nominal += record.snr_nominal_db;
  }
  mean_nominal /= std::max(ok, 1);
  const double runtime = elapsed_s(start);
  detail = fmt("mean mismatched SNR %.1f dB (<= 60), %.0f trials, runtime %.0f s (< 900)",
               mean_nominal, ok, runtime);
  return ok == 50 && mean_nominal <= 60.0 && runtime < 900.0;
}

// --- criterion 3: least-squares calibration error reduction ------------------

bool criterion_mbc_reduction(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config = standard_config(FrontEnd::kButterworth);
  config.study = StudyKind::kCalibration;
  config.trials = 100;
  config.calibration_samples = 189;
  config.reconstruct = false;
  const auto records = run_calibration_study(config);
  double mean_uncal = 0.0, mean_cal = 0.0;
  int ok = 0, ls_trials = 0, ls_improved = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    mean_uncal += record.rmse_uncalibrated;
    mean_cal += record.rmse_calibrated;
    if (record.branch == "least-squares") {
      ++ls_trials;
      if (record.rmse_calibrated <= record.rmse_uncalibrated) ++ls_improved;
    }
  }
  mean_uncal /= std::max(ok, 1);
  mean_cal /= std::max(ok, 1);
  const double ratio = mean_uncal / mean_cal;
  const double runtime = elapsed_s(start);
  detail = fmt("reduction %.1fx (>= 5), LS-branch improved %.0f/%.0f", ratio,
               ls_improved, ls_trials) +
           fmt(", mean Q(e) %.3g -> Q(e^) %.3g", mean_uncal, mean_cal) +
           fmt(", runtime %.0f s (< 600)", runtime);
  return ok == 100 && ls_trials == 100 && ratio >= 5.0 &&
         ls_improved == ls_trials && runtime < 600.0;
}

// --- criterion 4: regularized branch below L samples --------------------------

bool criterion_tikhonov_branch(std::string& detail) {
  ExperimentConfig config = standard_config(FrontEnd::kButterworth);
  config.study = StudyKind::kCalibration;
  config.trials = 100;
  config.calibration_samples = 105;
  config.reconstruct = false;
  const auto records = run_calibration_study(config);
  double mean_uncal = 0.0, mean_cal = 0.0;
  int ok = 0, degraded = 0, tikhonov_trials = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    mean_uncal += record.rmse_uncalibrated;
    mean_cal += record.rmse_calibrated;
    if (record.branch == "tikhonov") ++tikhonov_trials;
    if (record.rmse_calibrated > record.rmse_uncalibrated) ++degraded;
  }
  mean_uncal /= std::max(ok, 1);
  mean_cal /= std::max(ok, 1);
  const double ratio = mean_uncal / mean_cal;
  detail = fmt("reduction %.2fx (>= 1.5), degradation cases %.0f/%.0f (<= 25)", ratio,
               degraded, ok);
  return ok == 100 && tikhonov_trials == 100 && ratio >= 1.5 && degraded * 4 <= ok;
}

// --- criterion 5: calibrated reconstruction quality ---------------------------

bool criterion_calibrated_snr(std::string& detail) {
  ExperimentConfig config = standard_config(FrontEnd::kChebyshev);
  config.study = StudyKind::kCalibration;
  config.trials = 50;
  config.calibration_samples = 273;
  const auto records = run_calibration_study(config);
  double mean_cal = 0.0, mean_gain = 0.0;
  int ok = 0, dominated = 0;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    mean_cal += record.snr_calibrated_db;
    mean_gain += record.snr_calibrated_db - record.snr_nominal_db;
    if (record.snr_calibrated_db >= record.snr_nominal_db) ++dominated;
  }
  mean_cal /= std::max(ok, 1);
  mean_gain /= std::max(ok, 1);
  detail = fmt("mean calibrated SNR %.1f dB (>= 65), mean gain %.1f dB (>= 20)",
               mean_cal, mean_gain) +
           fmt(", calibrated >= nominal on %.0f/%.0f trials", dominated, ok);
  return ok == 50 && mean_cal >= 65.0 && mean_gain >= 20.0;
}

// --- criterion 6: calibration sample-count sweep trend -------------------------

bool criterion_mq_trend(std::string& detail) {
  ExperimentConfig config = standard_config(FrontEnd::kButterworth);
  config.study = StudyKind::kMqSweep;
  config.trials = 30;
  config.reconstruct = false;
  config.mq_list = {126, 189, 1050, 8400};
  config.k_list = {10};
  const auto cells = run_mq_sweep(config);
  detail = "mean Q(e^):";
  bool decreasing = cells.size() == 4;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    detail += fmt(" %.3g", cells[i].mean_rmse_calibrated);
    if (i > 0 && cells[i].mean_rmse_calibrated >= cells[i - 1].mean_rmse_calibrated) {
      decreasing = false;
    }
  }
  detail += " (strictly decreasing over M_q = 126, 189, 1050, 8400)";
  return decreasing;
}

// --- criterion 7: probing-baseline benchmark ----------------------------------

bool criterion_benchmark(std::string& detail) {
  ExperimentConfig config = standard_config(FrontEnd::kButterworth);
  config.study = StudyKind::kBenchmark;
  config.trials = 5;
  config.calibration_samples = 1050;
  config.reconstruct = false;  // sample counts, wall clock and RMSE only
  const auto records = run_benchmark(config);
  int ok = 0, dftti_not_worse = 0;
  double min_sample_factor = 1e300, min_time_factor = 1e300;
  for (const auto& record : records) {
    if (!record.ok) continue;
    ++ok;
    min_sample_factor =
        std::min(min_sample_factor,
                 static_cast<double>(record.samples_dftti) / record.samples_mbc);
    min_time_factor = std::min(min_time_factor, record.t_dftti_s / record.t_mbc_s);
    if (record.rmse_dftti <= record.rmse_mbc) ++dftti_not_worse;
  }
  const double n_quarter = 12600.0 / 4.0;
  detail = fmt("sample factor %.0f (>= %.0f), time factor %.0fx (>= 20)",
               min_sample_factor, n_quarter, min_time_factor) +
           fmt(", DFTTI RMSE <= MBC RMSE on %.0f/%.0f trials", dftti_not_worse, ok);
  return ok == 5 && min_sample_factor >= n_quarter && min_time_factor >= 20.0 &&
         dftti_not_worse * 10 >= ok * 9;
}

// --- criterion 8: fast property suite ------------------------------------------

bool property_d_matrix_identity() {
  Rng rng(5);
  const int n = 60, ratio = 3, len = 6, m_q = n / ratio;
  const ChippingSequence chipping = generate_chipping(n, 77);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.normal();

  // dense three-factor oracle for B E P x
  Eigen::MatrixXd selector = Eigen::MatrixXd::Zero(m_q, n);
  for (int row = 0; row < m_q; ++row) selector(row, row * ratio) = 1.0;
  Eigen::VectorXd demodulated = x;
  for (int i = 0; i < n; ++i) {
    demodulated(i) *= chipping.values[static_cast<std::size_t>(i)];
  }
  const DMatrix built = build_d_matrix(demodulated, ratio, len, m_q);
  for (int repeat = 0; repeat < 50; ++repeat) {
    Eigen::VectorXd error_taps(len);
    for (int i = 0; i < len; ++i) error_taps(i) = rng.normal();
    Eigen::MatrixXd toeplitz = Eigen::MatrixXd::Zero(n, n);
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col <= row; ++col) {
        if (row - col < len) toeplitz(row, col) = error_taps(row - col);
      }
    }
    const Eigen::VectorXd oracle = selector * (toeplitz * demodulated);
    const Eigen::VectorXd via_d = built.entries * error_taps;
    for (Eigen::Index row = 0; row < via_d.size(); ++row) {
      if (std::abs(via_d(row) -
                   oracle(built.row_map[static_cast<std::size_t>(row)])) > 1e-13) {
        return false;
      }
    }
  }
  return true;
}

bool property_matrix_free_vs_dense() {
  Rng rng(7);
  for (int instance = 0; instance < 100; ++instance) {
    const int ratio = 1 + static_cast<int>(rng.uniform_int(0, 3));
    const int m = 2 + static_cast<int>(rng.uniform_int(0, 9));
    const int n = m * ratio;
    if (n > 48) continue;
    ImpulseResponse h;
    h.samples.resize(static_cast<std::size_t>(1 + rng.uniform_int(0, n - 1)));
    for (double& v : h.samples) v = rng.normal();
    const RdSystem system = make_rd_system(
        generate_chipping(n, static_cast<std::uint64_t>(instance)), h, ratio);
    const Eigen::MatrixXd dense = dense_phi(system);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = rng.normal();
    if (((apply_phi(system, x) - dense * x).cwiseAbs().maxCoeff()) >= 1e-12) {
      return false;
    }
  }
  return true;
}

bool property_plant_and_recover() {
  Rng rng(21);
  const int ratio = 12, len = 108, m_q = 189, n = m_q * ratio;
  const ChippingSequence chipping = generate_chipping(n, 4);
  ImpulseResponse h;
  h.samples.resize(len);
  for (double& v : h.samples) v = 0.1 * rng.normal();
  ImpulseResponse h_hat = h;
  Eigen::VectorXd planted(len);
  for (int i = 0; i < len; ++i) {
    planted(i) = 1e-3 * rng.normal();
    h_hat.samples[static_cast<std::size_t>(i)] += planted(i);
  }
  const RdSystem model = make_rd_system(chipping, h, ratio);
  const RdSystem actual = make_rd_system(chipping, h_hat, ratio);
  MultitoneSignal x_q;
  x_q.samples.resize(n);
  for (int i = 0; i < n; ++i) x_q.samples(i) = rng.normal();
  const CalibrationResult result =
      mbc_calibrate({x_q, model, apply_phi(actual, x_q.samples)});
  return (Eigen::Map<const Eigen::VectorXd>(result.calibrated.samples.data(), len) -
          Eigen::Map<const Eigen::VectorXd>(h_hat.samples.data(), len))
             .norm() <= 1e-8 * planted.norm();
}

bool property_bilinear_dc() {
  for (FilterApproximation kind :
       {FilterApproximation::kButterworth, FilterApproximation::kChebyshev}) {
    const auto analog = lc_transfer_function(synthesize_nominal(kind));
    const auto discrete = bilinear_transform(analog, 12600.0);
    if (std::abs(discrete.evaluate_z({1.0, 0.0}) - analog.evaluate_s({0.0, 0.0})) >
        1e-12) {
      return false;
    }
  }
  return true;
}

bool property_partial_fraction_round_trip() {
  Rng rng(17);
  for (FilterApproximation kind :
       {FilterApproximation::kButterworth, FilterApproximation::kChebyshev}) {
    const auto discrete =
        bilinear_transform(lc_transfer_function(synthesize_nominal(kind)), 12600.0);
    const auto form = partial_fractions(discrete);
    double scale = 0.0, worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      const std::complex<double> z =
          std::exp(std::complex<double>(0.0, 6.283185307179586 * rng.uniform01()));
      const auto direct = discrete.evaluate_z(z);
      scale = std::max(scale, std::abs(direct));
      worst = std::max(worst, std::abs(direct - form.evaluate_z(z)));
    }
    if (worst > 1e-10 * scale) return false;
  }
  return true;
}

bool property_tikhonov_kkt() {
  Rng rng(9);
  for (int instance = 0; instance < 10; ++instance) {
    const int rows = 12 + static_cast<int>(rng.uniform_int(0, 8));
    const int cols = rows + 6;
    TikhonovProblem problem;
    problem.op.resize(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) problem.op(i, j) = rng.normal();
    }
    problem.rhs.resize(rows);
    for (int i = 0; i < rows; ++i) problem.rhs(i) = rng.normal();
    problem.g_diag = Eigen::VectorXd::Zero(cols);
    problem.g_diag.head(cols / 2).setOnes();
    problem.gamma = 0.3 + rng.uniform01();
    const TikhonovResult result = solve_tikhonov(problem);
    if (result.multiplier == 0.0) {
      if (result.constraint_value > problem.gamma * (1.0 + 1e-9)) return false;
    } else if (std::abs(result.constraint_value - problem.gamma) >=
               1e-6 * problem.gamma) {
      return false;
    }
  }
  return true;
}

bool property_bpdn_trivial() {
  // zero measurements
  const DenseComplexOperator identity(Eigen::MatrixXcd::Identity(16, 16));
  BpdnConfig config;
  config.zeta = 0.0;
  const auto zero = solve_bpdn(identity, Eigen::VectorXcd::Zero(16), config);
  if (!zero.converged || zero.coefficients.norm() != 0.0) return false;

  // identity operator
  Rng rng(3);
  Eigen::VectorXcd y(16);
  for (int i = 0; i < 16; ++i) y(i) = {rng.normal(), rng.normal()};
  const auto copy = solve_bpdn(identity, y, config);
  return (copy.coefficients - y).norm() < 1e-3 * y.norm();
}

bool criterion_properties(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  struct Property {
    const char* name;
    bool ok;
  };
  const Property properties[] = {
      {"d-matrix identity", property_d_matrix_identity()},
      {"matrix-free vs dense", property_matrix_free_vs_dense()},
      {"plant-and-recover", property_plant_and_recover()},
      {"bilinear dc gain", property_bilinear_dc()},
      {"partial-fraction round trip", property_partial_fraction_round_trip()},
      {"tikhonov kkt", property_tikhonov_kkt()},
      {"bpdn trivial cases", property_bpdn_trivial()},
  };
  bool all = true;
  detail.clear();
  for (const auto& property : properties) {
    if (!property.ok) {
      all = false;
      detail += std::string(" [") + property.name + " FAILED]";
    }
  }
  const double runtime = elapsed_s(start);
  detail = fmt("7 property checks, runtime %.1f s (< 60)", runtime) + detail;
  return all && runtime < 60.0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "matched-model baseline (oracle SNR)", criterion_matched_baseline},
      {2, "perturbation damage (mismatched SNR)", criterion_perturbation_damage},
      {3, "calibration error reduction (least squares)", criterion_mbc_reduction},
      {4, "calibration error reduction (regularized)", criterion_tikhonov_branch},
      {5, "calibrated reconstruction quality", criterion_calibrated_snr},
      {6, "sample-count sweep trend", criterion_mq_trend},
      {7, "probing-baseline benchmark", criterion_benchmark},
      {8, "property suite", criterion_properties},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& failure) {
      detail = std::string("exception: ") + failure.what();
    }
    if (!ok) ++failures;
    std::printf("CRITERION %d %s: %s — %s\n", criterion.id, ok ? "PASS" : "FAIL",
                criterion.label.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
