#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/calibrate.hpp"
#include "rdcalib/lc_ladder.hpp"
#include "rdcalib/rd_model.hpp"

namespace rdcalib {

enum class StudyKind { kPerturbation, kCalibration, kMqSweep, kBenchmark };

StudyKind study_from_string(const std::string& name);
std::string to_string(StudyKind study);

enum class FrontEnd { kButterworth, kChebyshev, kAccumulateDump };

FrontEnd front_end_from_string(const std::string& name);
std::string to_string(FrontEnd front_end);

struct ExperimentDims {
  double grid_rate_hz = 12600.0;
  double duration_s = 1.0;
  int subsampling_ratio = 12;
  // Model truncation length L; 0 selects the energy rule (smallest L keeping
  // 1 - 1e-6 of the impulse energy).
  int impulse_length = 108;
};

struct DiscretizationOptions {
  double rate_hz = 0.0;     // 0 -> discretize at the signal grid rate
  double prewarp_hz = 0.0;  // 0 -> no frequency prewarping
};

struct SignalSpec {
  int k_input = 5;
  int k_calibration = 10;
};

struct SolverSettings {
  double zeta_relative = 1e-6;  // fidelity bound as a fraction of ||y||
  int max_iterations = 2500;
  double optimality_tolerance = 1e-4;
};

struct ExperimentConfig {
  StudyKind study = StudyKind::kCalibration;
  FrontEnd front_end = FrontEnd::kButterworth;
  ToleranceModel tolerance;
  std::vector<LcPart> perturb_set;  // empty -> the four reactive parts
  int trials = 100;
  ExperimentDims dims;
  DiscretizationOptions discretization;
  SignalSpec signal;
  int calibration_samples = 189;  // M_q
  std::vector<int> mq_list;       // mq-sweep study
  std::vector<int> k_list;        // mq-sweep study
  bool reconstruct = true;        // run BPDN reconstructions where applicable
  SolverSettings solver;
  std::uint64_t seed = 20130301;
  int threads = 0;  // 0 -> auto

  int grid_length() const;
  int measurement_count() const;
  void validate() const;
};

// Q(e) = ||a - b||_2 / sqrt(L)
double rmse(const ImpulseResponse& a, const ImpulseResponse& b);
double rmse(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// 20 log10(||reference|| / ||reference - estimate||), capped at the 300 dB
// sentinel for exact matches. Throws on a zero reference.
double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate);

struct TrialRecord {
  int trial = 0;
  bool ok = true;
  std::string error;
  LcComponents components;
  double rmse_uncalibrated = 0.0;
  double rmse_calibrated = 0.0;  // NaN when the study does not calibrate
  double snr_nominal_db = 0.0;
  double snr_oracle_db = 0.0;
  double snr_calibrated_db = 0.0;
  std::string branch;  // "least-squares" | "tikhonov" | ""
  double calibration_residual = 0.0;
  int truncated_rows = 0;
  int retained_rows = 0;
  long calibration_sample_count = 0;
  double t_sample_s = 0.0;
  double t_solve_nominal_s = 0.0;
  double t_solve_oracle_s = 0.0;
  double t_calibrate_s = 0.0;
  double t_solve_calibrated_s = 0.0;
};

// Filter-perturbation study: per trial, draw a component set, sample the
// input through the realized front end, and reconstruct with the nominal
// (mismatched) and the realized (matched oracle) models.
std::vector<TrialRecord> run_perturbation_study(const ExperimentConfig& config);

// Calibration study: regenerates the perturbation-study trials (same derived
// seeds), runs the model-based calibration per trial, and reconstructs with
// the calibrated model.
std::vector<TrialRecord> run_calibration_study(const ExperimentConfig& config);

struct MqSweepCell {
  int mq = 0;
  int k = 0;
  int trials = 0;
  double mean_rmse_calibrated = 0.0;
  double mean_rmse_uncalibrated = 0.0;
  double mean_calibrate_seconds = 0.0;
  int tikhonov_count = 0;
};

// Calibration quality versus the number of calibration samples, per
// calibration-signal sparsity. Component draws are paired across cells.
std::vector<MqSweepCell> run_mq_sweep(const ExperimentConfig& config);

struct BenchmarkRecord {
  int trial = 0;
  bool ok = true;
  std::string error;
  double rmse_uncalibrated = 0.0;
  double rmse_mbc = 0.0;
  double rmse_dftti = 0.0;
  double snr_nominal_db = 0.0;
  double snr_oracle_db = 0.0;
  double snr_mbc_db = 0.0;
  double snr_dftti_db = 0.0;
  double t_mbc_s = 0.0;
  double t_dftti_s = 0.0;
  long samples_mbc = 0;
  long samples_dftti = 0;
};

// Head-to-head of the model-based calibration against the probing baseline:
// both calibrate the same realized front end, then the input is reconstructed
// with the calibrated, nominal, oracle and probed measurement matrices.
std::vector<BenchmarkRecord> run_benchmark(const ExperimentConfig& config);

// One trial's calibration exactly as the calibration study would run it
// (same derived seeds); used to export calibration artifacts.
struct SingleTrialCalibration {
  LcComponents components;
  double rmse_uncalibrated = 0.0;
  double rmse_calibrated = 0.0;
  CalibrationResult result;
};
SingleTrialCalibration calibrate_single_trial(const ExperimentConfig& config,
                                              int trial);

// The L-tap nominal model the study would use (for audits and plots).
ImpulseResponse nominal_model_response(const ExperimentConfig& config);

// Realized L-tap response for one trial's component draw (for plots).
ImpulseResponse trial_perturbed_response(const ExperimentConfig& config, int trial);

}  // namespace rdcalib
