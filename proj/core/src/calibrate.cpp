#include "rdcalib/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "rdcalib/errors.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/least_squares.hpp"

namespace rdcalib {

DMatrix build_d_matrix(const Eigen::VectorXd& demodulated, int subsampling_ratio,
                       int impulse_length, int measurement_count) {
  const int n = static_cast<int>(demodulated.size());
  const int ratio = subsampling_ratio;
  const int len = impulse_length;
  if (ratio < 1 || len < 1 || measurement_count < 1) {
    throw std::invalid_argument("build_d_matrix: dimensions must be positive");
  }
  if (len > n) {
    throw std::invalid_argument("build_d_matrix: impulse length exceeds grid length");
  }
  if ((measurement_count - 1) * ratio >= n) {
    throw std::invalid_argument("build_d_matrix: measurement count exceeds the grid");
  }

  const int truncated =
      len > ratio ? static_cast<int>((len - 1 + ratio - 1) / ratio) : 0;
  if (truncated >= measurement_count) {
    throw std::invalid_argument("build_d_matrix: truncation removes every row");
  }

  DMatrix out;
  out.truncated_rows = truncated;
  out.entries = Eigen::MatrixXd::Zero(measurement_count - truncated, len);
  out.row_map.reserve(static_cast<std::size_t>(measurement_count - truncated));
  for (int m = truncated; m < measurement_count; ++m) {
    out.row_map.push_back(m);
    const int pick = m * ratio;
    for (int l = 0; l < len; ++l) {
      const int idx = pick - l;
      if (idx >= 0 && idx < n) {
        out.entries(m - truncated, l) = demodulated(idx);
      }
    }
  }
  return out;
}

CalibrationResult mbc_calibrate(const CalibrationInput& input) {
  const RdSystem& model = input.system_model;
  model.validate();
  const int n = model.grid_length;
  const int m_q = model.measurement_count;
  const int len = model.impulse.length();
  if (input.known_signal.samples.size() != n) {
    throw std::invalid_argument("mbc_calibrate: known signal length must equal N");
  }
  if (input.measured.size() != m_q) {
    throw std::invalid_argument("mbc_calibrate: measured length must equal M_q");
  }

  const Eigen::VectorXd modeled = apply_phi(model, input.known_signal.samples);
  const Eigen::VectorXd y_check_full = modeled - input.measured;

  const Eigen::VectorXd demodulated =
      input.known_signal.samples.cwiseProduct(
          Eigen::Map<const Eigen::VectorXd>(model.chipping.values.data(), n));
  DMatrix d = build_d_matrix(demodulated, model.subsampling_ratio, len, m_q);

  Eigen::VectorXd y_check(d.entries.rows());
  for (Eigen::Index i = 0; i < y_check.size(); ++i) {
    y_check(i) = y_check_full(d.row_map[static_cast<std::size_t>(i)]);
  }

  CalibrationResult out;
  out.truncated_rows = d.truncated_rows;
  out.retained_rows = static_cast<int>(d.entries.rows());

  bool use_tikhonov = d.entries.rows() < len;
  if (!use_tikhonov) {
    try {
      const LeastSquaresResult ls = solve_least_squares(d.entries, y_check);
      out.error_estimate = ls.solution;
      out.residual_norm = ls.residual_norm;
      out.branch = CalibrationBranch::kLeastSquares;
    } catch (const DeficientRankError&) {
      use_tikhonov = true;
    }
  }
  if (use_tikhonov) {
    TikhonovProblem problem;
    problem.op = d.entries;
    problem.rhs = y_check;
    problem.g_diag = Eigen::VectorXd::Zero(len);
    problem.g_diag.head(len / 2).setOnes();
    const Eigen::MatrixXd gram = d.entries * d.entries.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(gram);
    problem.gamma = std::max(eigen.eigenvalues().minCoeff(), 1e-300);
    const TikhonovResult tk = solve_tikhonov(problem);
    out.error_estimate = tk.solution;
    out.residual_norm = tk.residual_norm;
    out.branch = CalibrationBranch::kTikhonov;
  }

  out.calibrated.sample_rate_hz = model.impulse.sample_rate_hz;
  out.calibrated.samples.resize(static_cast<std::size_t>(len));
  for (int l = 0; l < len; ++l) {
    out.calibrated.samples[static_cast<std::size_t>(l)] =
        model.impulse.samples[static_cast<std::size_t>(l)] - out.error_estimate(l);
  }
  out.calibrated_system = rebuild_system(model, out.calibrated);
  return out;
}

RdSystem rebuild_system(const RdSystem& nominal, const ImpulseResponse& h_new) {
  RdSystem out = nominal;
  out.impulse = h_new;
  out.validate();
  return out;
}

DfttiResult dftti_calibrate(const GridSampler& sampler, int grid_length,
                            int measurement_count, long max_samples) {
  const int n = grid_length;
  const int m = measurement_count;
  if (n < 2 || m < 1) {
    throw std::invalid_argument("dftti_calibrate: invalid dimensions");
  }
  const long probes = n;  // one cosine or sine probe per real degree of freedom
  if (max_samples > 0 && probes * static_cast<long>(m) > max_samples) {
    throw std::invalid_argument("dftti_calibrate: probe budget exceeded");
  }

  // Column k of Phi Psi is the response to exp(+2 pi i k n / N), obtained as
  // the cosine response plus i times the sine response. Conjugate symmetry
  // fills the upper half of the spectrum.
  Eigen::MatrixXcd response(m, n);
  Eigen::VectorXd probe(n);
  const int half = n / 2;
  long probes_used = 0;
  for (int k = 0; k <= half; ++k) {
    const double w = 2.0 * std::numbers::pi * k / static_cast<double>(n);
    for (int i = 0; i < n; ++i) probe(i) = std::cos(w * i);
    const Eigen::VectorXd cos_response = sampler(probe);
    ++probes_used;
    if (cos_response.size() != m) {
      throw std::invalid_argument("dftti_calibrate: sampler returned wrong length");
    }
    Eigen::VectorXd sin_response = Eigen::VectorXd::Zero(m);
    const bool needs_sine = k != 0 && !(n % 2 == 0 && k == half);
    if (needs_sine) {
      for (int i = 0; i < n; ++i) probe(i) = std::sin(w * i);
      sin_response = sampler(probe);
      ++probes_used;
    }
    for (int row = 0; row < m; ++row) {
      response(row, k) = {cos_response(row), sin_response(row)};
    }
    if (k != 0 && k != n - k) {
      for (int row = 0; row < m; ++row) {
        response(row, n - k) = std::conj(response(row, k));
      }
    }
  }

  // Phi = (Phi Psi) Psi^-1; each row picks up a forward transform over 1/N.
  Fft fft(n);
  Eigen::VectorXcd row_in(n);
  Eigen::VectorXcd row_out(n);
  DfttiResult out;
  out.phi = Eigen::MatrixXd::Zero(m, n);
  for (int row = 0; row < m; ++row) {
    row_in = response.row(row).transpose();
    fft.forward(row_in.data(), row_out.data());
    out.phi.row(row) = row_out.real().transpose() / static_cast<double>(n);
  }
  out.probes = probes_used;
  out.samples_used = probes_used * static_cast<long>(m);
  return out;
}

ImpulseResponse impulse_from_dense_phi(const Eigen::MatrixXd& phi,
                                       const ChippingSequence& chipping,
                                       int subsampling_ratio, int impulse_length) {
  const int m = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  const int len = impulse_length;
  if (chipping.length() != n) {
    throw std::invalid_argument("impulse_from_dense_phi: chipping length mismatch");
  }
  const int first_full = (len - 1 + subsampling_ratio - 1) / subsampling_ratio;
  if (first_full >= m) {
    throw std::invalid_argument("impulse_from_dense_phi: no fully supported row");
  }

  // Phi[m, n] = p[n] h[mR - n]; averaging over a few full rows damps the
  // round-off left by the probing transforms.
  const int kRowsToAverage = std::min(8, m - first_full);
  ImpulseResponse out;
  out.samples.assign(static_cast<std::size_t>(len), 0.0);
  for (int j = 0; j < kRowsToAverage; ++j) {
    const int row = first_full + ((m - 1 - first_full) * j) / std::max(1, kRowsToAverage - 1);
    const int pick = row * subsampling_ratio;
    for (int l = 0; l < len; ++l) {
      const int idx = pick - l;
      out.samples[static_cast<std::size_t>(l)] +=
          phi(row, idx) * chipping.values[static_cast<std::size_t>(idx)];
    }
  }
  for (double& v : out.samples) v /= kRowsToAverage;
  return out;
}

}  // namespace rdcalib
