#pragma once

#include <Eigen/Dense>

#include "rdcalib/fourier.hpp"
#include "rdcalib/rd_model.hpp"

namespace rdcalib {

// Matrix-free complex linear map with an adjoint, the operator contract the
// sparse solver works against.
class ComplexLinearOperator {
 public:
  virtual ~ComplexLinearOperator() = default;
  virtual Eigen::Index rows() const = 0;
  virtual Eigen::Index cols() const = 0;
  virtual Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const = 0;
  virtual Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& y) const = 0;
};

// A = Phi Psi with the matrix-free random demodulator Phi and the Fourier
// synthesis dictionary Psi. Immutable after construction; application is
// reentrant.
class RdSynthesisOperator final : public ComplexLinearOperator {
 public:
  RdSynthesisOperator(RdSystem system, const FourierDictionary* dictionary);

  Eigen::Index rows() const override { return system_.measurement_count; }
  Eigen::Index cols() const override { return system_.grid_length; }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& alpha) const override;
  Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& y) const override;

  const RdSystem& system() const { return system_; }

 private:
  RdSystem system_;
  const FourierDictionary* dictionary_;  // not owned
};

// A = Phi Psi with an explicitly materialized Phi (used for probed
// measurement matrices that have no matrix-free form).
class DensePhiSynthesisOperator final : public ComplexLinearOperator {
 public:
  DensePhiSynthesisOperator(Eigen::MatrixXd phi, const FourierDictionary* dictionary);

  Eigen::Index rows() const override { return phi_.rows(); }
  Eigen::Index cols() const override { return phi_.cols(); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& alpha) const override;
  Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& y) const override;

 private:
  Eigen::MatrixXd phi_;
  const FourierDictionary* dictionary_;  // not owned
};

// Thin adapter for dense complex matrices (tests, small systems).
class DenseComplexOperator final : public ComplexLinearOperator {
 public:
  explicit DenseComplexOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {}

  Eigen::Index rows() const override { return matrix_.rows(); }
  Eigen::Index cols() const override { return matrix_.cols(); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const override { return matrix_ * x; }
  Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& y) const override {
    return matrix_.adjoint() * y;
  }

 private:
  Eigen::MatrixXcd matrix_;
};

}  // namespace rdcalib
