#include "rdcalib/lc_ladder.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "rdcalib/errors.hpp"

namespace rdcalib {

void LcComponents::validate() const {
  const std::array<std::pair<const char*, double>, 6> entries{{
      {"c1", c1}, {"c3", c3}, {"l2", l2}, {"l4", l4}, {"rs", rs}, {"rl", rl},
  }};
  for (const auto& [name, value] : entries) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidComponentError(std::string("LC component ") + name +
                                  " must be strictly positive");
    }
  }
}

std::span<const LcPart> reactive_parts() {
  static constexpr std::array<LcPart, 4> kParts{LcPart::kC1, LcPart::kC3,
                                                LcPart::kL2, LcPart::kL4};
  return kParts;
}

FilterApproximation approximation_from_string(const std::string& name) {
  if (name == "butterworth") return FilterApproximation::kButterworth;
  if (name == "chebyshev") return FilterApproximation::kChebyshev;
  throw std::invalid_argument("unknown filter approximation: " + name);
}

std::string to_string(FilterApproximation approximation) {
  switch (approximation) {
    case FilterApproximation::kButterworth:
      return "butterworth";
    case FilterApproximation::kChebyshev:
      return "chebyshev";
  }
  throw std::invalid_argument("unknown filter approximation enum value");
}

void ToleranceModel::validate() const {
  if (!(sigma_fraction > 0.0) || !std::isfinite(sigma_fraction)) {
    throw std::invalid_argument("tolerance model: sigma_fraction must be > 0");
  }
  if (!(truncation_sigmas > 0.0) || !std::isfinite(truncation_sigmas)) {
    throw std::invalid_argument("tolerance model: truncation_sigmas must be > 0");
  }
}

RationalTransferFunction lc_transfer_function(const LcComponents& c) {
  c.validate();
  const double ratio = c.rs / c.rl;
  const double beta0 = ratio + 1.0;
  const double beta1 = (c.l2 + c.l4) / c.rl + (c.c1 + c.c3) * c.rs;
  const double beta2 = c.l2 * c.c3 + ratio * (c.c1 * c.l2 + c.c1 * c.l4 + c.c3 * c.l4);
  const double beta3 = c.l2 * c.c3 * c.l4 / c.rl + c.rs * c.c1 * c.l2 * c.c3;
  const double beta4 = ratio * c.c1 * c.l2 * c.c3 * c.l4;
  const double lambda0 = std::sqrt(4.0 * ratio);

  RationalTransferFunction tf;
  tf.numerator = {lambda0};
  tf.denominator = {beta0, beta1, beta2, beta3, beta4};
  tf.domain = TfDomain::kLaplaceS;
  return tf;
}

LcComponents synthesize_nominal(FilterApproximation approximation) {
  switch (approximation) {
    case FilterApproximation::kButterworth:
      return {4.8725e-6, 11.7632e-6, 29.408e-3, 12.1812e-3, 50.0, 50.0};
    case FilterApproximation::kChebyshev:
      return {5.7812e-6, 7.9132e-6, 36.0591e-3, 24.6173e-3, 50.0, 100.0};
  }
  throw std::invalid_argument("unknown filter approximation enum value");
}

namespace {

double truncated_gaussian(double mean, double sigma, double truncation_sigmas,
                          Rng& rng) {
  // Rejection keeps the distribution exactly the renormalized Gaussian on the
  // band; at +/- 1 sigma the acceptance rate is ~68%.
  while (true) {
    const double draw = rng.normal(mean, sigma);
    if (std::abs(draw - mean) <= truncation_sigmas * sigma) return draw;
  }
}

double& select(LcComponents& c, LcPart part) {
  switch (part) {
    case LcPart::kC1: return c.c1;
    case LcPart::kC3: return c.c3;
    case LcPart::kL2: return c.l2;
    case LcPart::kL4: return c.l4;
    case LcPart::kRs: return c.rs;
    case LcPart::kRl: return c.rl;
  }
  throw std::invalid_argument("unknown LC part");
}

}  // namespace

LcComponents perturb_components(const LcComponents& nominal,
                                const ToleranceModel& model,
                                std::span<const LcPart> which, Rng& rng) {
  nominal.validate();
  model.validate();
  if (which.empty()) {
    throw std::invalid_argument("perturb_components: empty component subset");
  }
  LcComponents out = nominal;
  for (LcPart part : which) {
    double& value = select(out, part);
    value = truncated_gaussian(value, model.sigma_fraction * value,
                               model.truncation_sigmas, rng);
  }
  return out;
}

}  // namespace rdcalib
