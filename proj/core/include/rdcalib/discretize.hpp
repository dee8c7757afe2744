#pragma once

#include <complex>
#include <vector>

#include "rdcalib/transfer_function.hpp"

namespace rdcalib {

// Sampled impulse response of a discrete-time system. h[l] is taken as zero
// outside 0 <= l < length() (causal FIR approximation).
struct ImpulseResponse {
  std::vector<double> samples;
  double sample_rate_hz = 0.0;

  int length() const { return static_cast<int>(samples.size()); }
};

// Simple-pole decomposition of a discrete transfer function:
//
//   H(z) = sum_l direct[l] z^-l  +  sum_k residues[k] / (1 - poles[k] z^-1)
//
// Complex poles occur in conjugate pairs for real systems.
struct PoleResidueForm {
  std::vector<std::complex<double>> poles;
  std::vector<std::complex<double>> residues;
  std::vector<double> direct;  // FIR part from polynomial division
  double sample_rate_hz = 0.0;

  // All poles strictly inside the unit circle.
  bool stable() const;

  std::complex<double> evaluate_z(std::complex<double> z) const;
};

// Maps an analog transfer function to the z-domain with
// s <- (2/T)(z-1)/(z+1). When prewarp_hz > 0 the mapping constant is chosen
// so the response is exact at that frequency instead of at DC slope.
// Throws DegenerateMappingError when a pole lands on z = -1.
RationalTransferFunction bilinear_transform(const RationalTransferFunction& analog,
                                            double sample_rate_hz,
                                            double prewarp_hz = 0.0);

// Expands a discrete transfer function into simple poles. Requires distinct
// poles (relative separation > 1e-7), otherwise throws RepeatedPoleError.
PoleResidueForm partial_fractions(const RationalTransferFunction& discrete);

// First `length` samples of the inverse z-transform,
// h[l] = direct[l] + sum_k residues[k] * poles[k]^l. Imaginary parts of the
// pole sums cancel for real systems and are discarded after a magnitude check.
// Unstable poles still produce a (diverging) response; consult
// PoleResidueForm::stable() to detect that case.
ImpulseResponse impulse_response(const PoleResidueForm& form, int length);

// Flat unity response of length R (integrate-and-reset front end).
ImpulseResponse accumulate_and_dump_response(int subsampling_ratio);

// Smallest truncation length whose samples capture at least `energy_fraction`
// of the total impulse energy, probed up to max_length samples.
int energy_rule_length(const PoleResidueForm& form, double energy_fraction,
                       int max_length);

}  // namespace rdcalib
