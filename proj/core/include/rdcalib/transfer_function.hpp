#pragma once

#include <complex>
#include <vector>

namespace rdcalib {

enum class TfDomain {
  kLaplaceS,   // coefficients are ascending powers of s
  kDiscreteZ,  // coefficients are ascending powers of z^-1
};

// A rational transfer function with real coefficients. Analog (s-domain)
// instances are numerator/denominator polynomials in s; discrete instances
// are polynomials in z^-1 together with their sample period.
struct RationalTransferFunction {
  std::vector<double> numerator;
  std::vector<double> denominator;
  TfDomain domain = TfDomain::kLaplaceS;
  double sample_period_s = 0.0;  // meaningful only for kDiscreteZ

  // H(s) for analog systems.
  std::complex<double> evaluate_s(std::complex<double> s) const;
  // H(z) for discrete systems (the stored polynomials are in z^-1).
  std::complex<double> evaluate_z(std::complex<double> z) const;

  // deg(num) < deg(den) after trimming negligible leading coefficients.
  bool strictly_proper() const;

  int numerator_degree() const;
  int denominator_degree() const;

  // Throws std::invalid_argument when a basic invariant is broken
  // (empty/zero denominator, missing sample period, non-finite coefficient).
  void validate() const;
};

}  // namespace rdcalib
