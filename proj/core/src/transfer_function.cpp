#include "rdcalib/transfer_function.hpp"

#include <cmath>
#include <stdexcept>

#include "rdcalib/polynomial.hpp"

namespace rdcalib {

std::complex<double> RationalTransferFunction::evaluate_s(std::complex<double> s) const {
  return poly::evaluate(numerator, s) / poly::evaluate(denominator, s);
}

std::complex<double> RationalTransferFunction::evaluate_z(std::complex<double> z) const {
  const std::complex<double> w = 1.0 / z;
  return poly::evaluate(numerator, w) / poly::evaluate(denominator, w);
}

bool RationalTransferFunction::strictly_proper() const {
  return numerator_degree() < denominator_degree();
}

int RationalTransferFunction::numerator_degree() const {
  return poly::degree(numerator);
}

int RationalTransferFunction::denominator_degree() const {
  return poly::degree(denominator);
}

void RationalTransferFunction::validate() const {
  if (numerator.empty() || denominator.empty()) {
    throw std::invalid_argument("transfer function: empty coefficient list");
  }
  for (double v : numerator) {
    if (!std::isfinite(v)) throw std::invalid_argument("transfer function: non-finite numerator");
  }
  for (double v : denominator) {
    if (!std::isfinite(v)) throw std::invalid_argument("transfer function: non-finite denominator");
  }
  const auto den = poly::trim(denominator);
  if (den.size() == 1 && den[0] == 0.0) {
    throw std::invalid_argument("transfer function: zero denominator");
  }
  if (domain == TfDomain::kDiscreteZ && sample_period_s <= 0.0) {
    throw std::invalid_argument("transfer function: discrete system needs a sample period");
  }
}

}  // namespace rdcalib
