#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdcalib/random.hpp"
#include "rdcalib/transfer_function.hpp"

namespace rdcalib {

// Component values of the doubly terminated 4th-order LC ladder
// (source Rs, shunt C1, series L2, shunt C3, series L4, load Rl).
// SI base units throughout: farads, henries, ohms.
struct LcComponents {
  double c1 = 0.0;
  double c3 = 0.0;
  double l2 = 0.0;
  double l4 = 0.0;
  double rs = 0.0;
  double rl = 0.0;

  void validate() const;  // throws InvalidComponentError unless all positive
};

enum class LcPart { kC1, kC3, kL2, kL4, kRs, kRl };

// The four reactive parts; the terminations stay nominal in the
// all-component tolerance scenario.
std::span<const LcPart> reactive_parts();

enum class FilterApproximation { kButterworth, kChebyshev };

FilterApproximation approximation_from_string(const std::string& name);
std::string to_string(FilterApproximation approximation);

// Manufacturing tolerance: component values drawn from a Gaussian centered at
// the nominal value with sigma = sigma_fraction * nominal, hard-truncated at
// +/- truncation_sigmas * sigma.
struct ToleranceModel {
  double sigma_fraction = 0.02;
  double truncation_sigmas = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Transfer function of the ladder from nodal analysis:
//
//   H(s) = lambda0 / (beta0 + beta1 s + beta2 s^2 + beta3 s^3 + beta4 s^4)
//
//   beta0 = Rs/Rl + 1
//   beta1 = (L2 + L4)/Rl + (C1 + C3) Rs
//   beta2 = L2 C3 + (Rs/Rl)(C1 L2 + C1 L4 + C3 L4)
//   beta3 = L2 C3 L4 / Rl + Rs C1 L2 C3
//   beta4 = (Rs/Rl) C1 L2 C3 L4
//   lambda0 = sqrt(4 Rs / Rl)
//
// lambda0 normalizes for maximum power transfer, so |H(0)| = 1 for matched
// terminations and H(0) = sqrt(4 Rs/Rl) / (Rs/Rl + 1) in general.
RationalTransferFunction lc_transfer_function(const LcComponents& components);

// Nominal component sets of the 500 Hz designs.
LcComponents synthesize_nominal(FilterApproximation approximation);

// Redraws the selected components from the truncated Gaussian around their
// nominal values (rejection sampling, so the +/- band is exact). Unselected
// components are returned unchanged. RNG state is caller-owned.
LcComponents perturb_components(const LcComponents& nominal,
                                const ToleranceModel& model,
                                std::span<const LcPart> which, Rng& rng);

}  // namespace rdcalib
