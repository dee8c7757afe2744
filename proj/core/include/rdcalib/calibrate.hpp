#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rdcalib/rd_model.hpp"

namespace rdcalib {

// Convolution-as-matrix form of the demodulated calibration signal:
// D e reproduces the subsampled convolution of d with any L-tap error vector,
// row m covering taps d[mR - l], l = 0..L-1. Rows whose support would reach
// before sample 0 are dropped; row_map records the surviving measurement
// indices.
struct DMatrix {
  Eigen::MatrixXd entries;
  std::vector<int> row_map;
  int truncated_rows = 0;
};

// demodulated = elementwise product of the known signal and the chipping
// sequence. measurement_count rows are formed before truncation. When L > R
// the first ceil((L-1)/R) rows are dropped (equal to L/R whenever that is an
// integer); when L <= R no rows are dropped.
DMatrix build_d_matrix(const Eigen::VectorXd& demodulated, int subsampling_ratio,
                       int impulse_length, int measurement_count);

enum class CalibrationBranch { kLeastSquares, kTikhonov };

struct CalibrationInput {
  MultitoneSignal known_signal;  // x_q on the calibration grid
  RdSystem system_model;         // nominal model (h of length L) on the same grid
  Eigen::VectorXd measured;      // y_hat_q from the actual front end
};

struct CalibrationResult {
  Eigen::VectorXd error_estimate;  // e_hat, length L
  ImpulseResponse calibrated;      // h_ring = h - e_hat
  RdSystem calibrated_system;      // nominal system with h replaced by h_ring
  CalibrationBranch branch = CalibrationBranch::kLeastSquares;
  double residual_norm = 0.0;
  int truncated_rows = 0;
  int retained_rows = 0;
};

// Model-based calibration: measure a known signal, difference against the
// modeled measurements, and estimate the impulse-response error by (possibly
// regularized) least squares.
//
// With y_check = y_q - y_hat_q = -B E P x_q the estimate satisfies
// e_hat ~= -e, so h_ring = h - e_hat ~= h + e = h_hat recovers the realized
// response. The regularized branch runs when the retained row count drops
// below L, with G = diag(ones(L/2), zeros(L/2)) and
// gamma = lambda_min(D D^T).
CalibrationResult mbc_calibrate(const CalibrationInput& input);

// Same chipping and dimensions, replaced filter.
RdSystem rebuild_system(const RdSystem& nominal, const ImpulseResponse& h_new);

// Measurement response of a black-box acquisition front end to one grid signal.
using GridSampler = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct DfttiResult {
  Eigen::MatrixXd phi;       // recovered M x N measurement matrix
  long probes = 0;           // grid signals fed to the black box
  long samples_used = 0;     // probes * M
};

// Trigonometric-interpolation baseline: probes the black box with the cosine/
// sine pair of every frequency bin (N real probes in total), assembles
// Phi Psi column by column, and recovers Phi by applying the inverse
// dictionary transform to its rows. max_samples = 0 disables the budget guard.
DfttiResult dftti_calibrate(const GridSampler& sampler, int grid_length,
                            int measurement_count, long max_samples = 0);

// Reads an L-tap impulse response back out of a dense measurement matrix
// using the known chipping signs, averaging over a few fully supported rows.
ImpulseResponse impulse_from_dense_phi(const Eigen::MatrixXd& phi,
                                       const ChippingSequence& chipping,
                                       int subsampling_ratio, int impulse_length);

}  // namespace rdcalib
