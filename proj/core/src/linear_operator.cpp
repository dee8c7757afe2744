#include "rdcalib/linear_operator.hpp"

#include <stdexcept>
#include <utility>

namespace rdcalib {

RdSynthesisOperator::RdSynthesisOperator(RdSystem system,
                                         const FourierDictionary* dictionary)
    : system_(std::move(system)), dictionary_(dictionary) {
  system_.validate();
  if (dictionary_ == nullptr || dictionary_->size() != system_.grid_length) {
    throw std::invalid_argument("RdSynthesisOperator: dictionary size must equal N");
  }
}

Eigen::VectorXcd RdSynthesisOperator::apply(const Eigen::VectorXcd& alpha) const {
  return apply_phi(system_, dictionary_->synthesize(alpha));
}

Eigen::VectorXcd RdSynthesisOperator::apply_adjoint(const Eigen::VectorXcd& y) const {
  return dictionary_->adjoint(apply_phi_adjoint(system_, y));
}

DensePhiSynthesisOperator::DensePhiSynthesisOperator(Eigen::MatrixXd phi,
                                                     const FourierDictionary* dictionary)
    : phi_(std::move(phi)), dictionary_(dictionary) {
  if (dictionary_ == nullptr || dictionary_->size() != phi_.cols()) {
    throw std::invalid_argument("DensePhiSynthesisOperator: dictionary size must equal N");
  }
}

Eigen::VectorXcd DensePhiSynthesisOperator::apply(const Eigen::VectorXcd& alpha) const {
  return phi_ * dictionary_->synthesize(alpha);
}

Eigen::VectorXcd DensePhiSynthesisOperator::apply_adjoint(const Eigen::VectorXcd& y) const {
  return dictionary_->adjoint(phi_.transpose() * y);
}

}  // namespace rdcalib
