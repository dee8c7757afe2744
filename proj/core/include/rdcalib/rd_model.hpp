#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rdcalib/discretize.hpp"

namespace rdcalib {

// Pseudorandom +/-1 sequence, one chip per Nyquist-grid sample.
struct ChippingSequence {
  std::vector<double> values;
  std::uint64_t seed = 0;

  int length() const { return static_cast<int>(values.size()); }
};

ChippingSequence generate_chipping(int length, std::uint64_t seed);

struct Tone {
  int frequency_hz = 0;
  int amplitude = 0;
};

// Sparse multitone test signal: zero-phase cosines on the oversampled grid,
// frequencies from {2..1500} Hz with one tone pinned at 1500 Hz, amplitudes
// from {1..10}.
struct MultitoneSignal {
  std::vector<Tone> tones;
  double duration_s = 0.0;
  double grid_rate_hz = 0.0;
  Eigen::VectorXd samples;
};

MultitoneSignal generate_multitone(int sparsity, std::uint64_t seed,
                                   double grid_rate_hz, double duration_s);

// The random-demodulator forward model Phi = B H P: chipping diagonal P,
// banded Toeplitz filter H from the impulse response, and the stride-R
// selector B that keeps grid indices 0, R, 2R, ...
struct RdSystem {
  ChippingSequence chipping;
  ImpulseResponse impulse;
  int grid_length = 0;        // N
  int measurement_count = 0;  // M
  int subsampling_ratio = 0;  // R, N = M R

  void validate() const;
};

// Builds a system from a chipping sequence of length N and a filter; N must
// be an exact multiple of R.
RdSystem make_rd_system(ChippingSequence chipping, ImpulseResponse impulse,
                        int subsampling_ratio);

// y[m] = sum_n x[n] p[n] h[mR - n], matrix-free (chip, FIR filter, stride-R pick).
Eigen::VectorXd apply_phi(const RdSystem& system, const Eigen::VectorXd& x);
Eigen::VectorXcd apply_phi(const RdSystem& system, const Eigen::VectorXcd& x);

// Transpose action on measurement-domain vectors (Phi is real).
Eigen::VectorXd apply_phi_adjoint(const RdSystem& system, const Eigen::VectorXd& y);
Eigen::VectorXcd apply_phi_adjoint(const RdSystem& system, const Eigen::VectorXcd& y);

// Explicit M x N product B H P. Guarded against accidental huge
// materializations (M * N <= 5e7 entries).
Eigen::MatrixXd dense_phi(const RdSystem& system);

}  // namespace rdcalib
