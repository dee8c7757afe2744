#include "rdcalib/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rdcalib/errors.hpp"
#include "rdcalib/polynomial.hpp"

namespace rdcalib {

bool PoleResidueForm::stable() const {
  return std::all_of(poles.begin(), poles.end(),
                     [](const std::complex<double>& q) { return std::abs(q) < 1.0; });
}

std::complex<double> PoleResidueForm::evaluate_z(std::complex<double> z) const {
  const std::complex<double> w = 1.0 / z;
  std::complex<double> acc = poly::evaluate(direct, w);
  for (std::size_t k = 0; k < poles.size(); ++k) {
    acc += residues[k] / (1.0 - poles[k] * w);
  }
  return acc;
}

RationalTransferFunction bilinear_transform(const RationalTransferFunction& analog,
                                            double sample_rate_hz,
                                            double prewarp_hz) {
  analog.validate();
  if (analog.domain != TfDomain::kLaplaceS) {
    throw std::invalid_argument("bilinear_transform: expected an s-domain system");
  }
  if (!analog.strictly_proper()) {
    throw std::invalid_argument("bilinear_transform: transfer function must be strictly proper");
  }
  if (!(sample_rate_hz > 0.0)) {
    throw std::invalid_argument("bilinear_transform: sample rate must be positive");
  }
  const double period = 1.0 / sample_rate_hz;
  double k = 2.0 / period;
  if (prewarp_hz > 0.0) {
    const double w0 = 2.0 * std::numbers::pi * prewarp_hz;
    k = w0 / std::tan(w0 * period / 2.0);
  }

  const poly::Coeffs num_s = poly::trim(analog.numerator);
  const poly::Coeffs den_s = poly::trim(analog.denominator);
  const int order = static_cast<int>(den_s.size()) - 1;

  // Substituting s = k (1 - w)/(1 + w) with w = z^-1 and clearing (1 + w)^order:
  //   sum_c coeff_c k^c (1 - w)^c (1 + w)^(order - c)
  const auto expand = [&](const poly::Coeffs& coeffs) {
    poly::Coeffs out(static_cast<std::size_t>(order) + 1, 0.0);
    double k_pow = 1.0;
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      poly::Coeffs term{1.0};
      for (int i = 0; i < static_cast<int>(c); ++i) term = poly::multiply(term, {1.0, -1.0});
      for (int i = 0; i < order - static_cast<int>(c); ++i) term = poly::multiply(term, {1.0, 1.0});
      out = poly::add(out, poly::scale(term, coeffs[c] * k_pow));
      k_pow *= k;
    }
    return out;
  };

  poly::Coeffs b = expand(num_s);
  poly::Coeffs a = expand(den_s);

  // A root of the w-domain denominator at w = -1 means an analog pole was
  // mapped onto z = -1 (the tangent singularity of the frequency warp).
  double a_scale = 0.0;
  for (double v : a) a_scale += std::abs(v);
  const std::complex<double> at_minus_one = poly::evaluate(a, {-1.0, 0.0});
  if (std::abs(at_minus_one) <= 1e-12 * a_scale) {
    throw DegenerateMappingError("bilinear_transform: pole mapped onto z = -1");
  }
  if (std::abs(a[0]) <= 1e-14 * a_scale) {
    throw DegenerateMappingError("bilinear_transform: degenerate constant denominator term");
  }

  const double norm = a[0];
  for (double& v : b) v /= norm;
  for (double& v : a) v /= norm;

  RationalTransferFunction out;
  out.numerator = std::move(b);
  out.denominator = std::move(a);
  out.domain = TfDomain::kDiscreteZ;
  out.sample_period_s = period;
  return out;
}

PoleResidueForm partial_fractions(const RationalTransferFunction& discrete) {
  discrete.validate();
  if (discrete.domain != TfDomain::kDiscreteZ) {
    throw std::invalid_argument("partial_fractions: expected a z-domain system");
  }
  const poly::Coeffs num = poly::trim(discrete.numerator);
  const poly::Coeffs den = poly::trim(discrete.denominator);

  PoleResidueForm form;
  form.sample_rate_hz = 1.0 / discrete.sample_period_s;

  if (den.size() == 1) {
    // Pure FIR: all "poles" sit at z = 0 and the taps are the direct part.
    form.direct = poly::scale(num, 1.0 / den[0]);
    return form;
  }

  // Split off the FIR part so the remainder is strictly proper in z^-1.
  poly::Coeffs remainder = num;
  if (num.size() >= den.size()) {
    poly::divide(num, den, form.direct, remainder);
  } else {
    form.direct = {0.0};
  }

  form.poles = poly::roots(den);  // roots in w = z^-1 are 1/q
  for (auto& w_root : form.poles) w_root = 1.0 / w_root;

  double max_abs = 0.0;
  for (const auto& q : form.poles) max_abs = std::max(max_abs, std::abs(q));
  for (std::size_t i = 0; i < form.poles.size(); ++i) {
    for (std::size_t j = i + 1; j < form.poles.size(); ++j) {
      if (std::abs(form.poles[i] - form.poles[j]) <= 1e-7 * std::max(1.0, max_abs)) {
        throw RepeatedPoleError("partial_fractions: repeated poles (separation below 1e-7)");
      }
    }
  }

  // Cover-up residue via the derivative of the denominator in w:
  //   U_k = -q_k * remainder(1/q_k) / den'(1/q_k)
  const poly::Coeffs den_deriv = poly::derivative(den);
  form.residues.resize(form.poles.size());
  for (std::size_t k = 0; k < form.poles.size(); ++k) {
    const std::complex<double> w = 1.0 / form.poles[k];
    form.residues[k] =
        -form.poles[k] * poly::evaluate(remainder, w) / poly::evaluate(den_deriv, w);
  }
  return form;
}

ImpulseResponse impulse_response(const PoleResidueForm& form, int length) {
  if (length < 1) {
    throw std::invalid_argument("impulse_response: length must be >= 1");
  }
  ImpulseResponse out;
  out.sample_rate_hz = form.sample_rate_hz;
  out.samples.assign(static_cast<std::size_t>(length), 0.0);

  for (std::size_t l = 0; l < form.direct.size() && l < out.samples.size(); ++l) {
    out.samples[l] += form.direct[l];
  }

  std::vector<std::complex<double>> powers(form.poles.size(), {1.0, 0.0});
  double max_abs = 0.0;
  double max_imag = 0.0;
  for (int l = 0; l < length; ++l) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < form.poles.size(); ++k) {
      acc += form.residues[k] * powers[k];
      powers[k] *= form.poles[k];
    }
    out.samples[static_cast<std::size_t>(l)] += acc.real();
    max_abs = std::max(max_abs, std::abs(out.samples[static_cast<std::size_t>(l)]));
    max_imag = std::max(max_imag, std::abs(acc.imag()));
  }
  if (max_imag > 1e-12 * std::max(max_abs, 1e-300)) {
    throw std::runtime_error(
        "impulse_response: imaginary parts did not cancel; poles/residues are not "
        "conjugate-symmetric");
  }
  return out;
}

ImpulseResponse accumulate_and_dump_response(int subsampling_ratio) {
  if (subsampling_ratio < 1) {
    throw std::invalid_argument("accumulate_and_dump_response: R must be >= 1");
  }
  ImpulseResponse out;
  out.samples.assign(static_cast<std::size_t>(subsampling_ratio), 1.0);
  return out;
}

int energy_rule_length(const PoleResidueForm& form, double energy_fraction,
                       int max_length) {
  if (!(energy_fraction > 0.0) || energy_fraction > 1.0) {
    throw std::invalid_argument("energy_rule_length: fraction must be in (0, 1]");
  }
  if (max_length < 1) {
    throw std::invalid_argument("energy_rule_length: max_length must be >= 1");
  }
  const ImpulseResponse h = impulse_response(form, max_length);
  std::vector<double> cumulative(h.samples.size());
  double total = 0.0;
  for (std::size_t i = 0; i < h.samples.size(); ++i) {
    total += h.samples[i] * h.samples[i];
    cumulative[i] = total;
  }
  if (total <= 0.0) return 1;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    if (cumulative[i] >= energy_fraction * total) return static_cast<int>(i) + 1;
  }
  return max_length;
}

}  // namespace rdcalib
