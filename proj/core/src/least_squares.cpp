#include "rdcalib/least_squares.hpp"

#include <cmath>
#include <stdexcept>

#include "rdcalib/errors.hpp"

namespace rdcalib {

LeastSquaresResult solve_least_squares(const Eigen::MatrixXd& op,
                                       const Eigen::VectorXd& rhs) {
  if (op.rows() != rhs.size()) {
    throw std::invalid_argument("solve_least_squares: operator/rhs size mismatch");
  }
  if (op.rows() < op.cols()) {
    throw DeficientRankError("solve_least_squares: underdetermined system");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(op);
  const auto& r_diag = qr.matrixR().diagonal();
  const double r_max = std::abs(r_diag(0));
  const double r_min = std::abs(r_diag(op.cols() - 1));
  constexpr double kConditionGuard = 1e10;
  if (!(r_min > 0.0) || r_max / r_min > kConditionGuard ||
      qr.rank() < op.cols()) {
    throw DeficientRankError("solve_least_squares: operator is numerically rank deficient");
  }
  LeastSquaresResult out;
  out.solution = qr.solve(rhs);
  out.residual_norm = (op * out.solution - rhs).norm();
  return out;
}

void TikhonovProblem::validate() const {
  if (op.rows() != rhs.size()) {
    throw std::invalid_argument("tikhonov: operator/rhs size mismatch");
  }
  if (g_diag.size() != op.cols()) {
    throw std::invalid_argument("tikhonov: regularization diagonal size mismatch");
  }
  for (Eigen::Index i = 0; i < g_diag.size(); ++i) {
    if (g_diag(i) != 0.0 && g_diag(i) != 1.0) {
      throw std::invalid_argument("tikhonov: G diagonal entries must be 0 or 1");
    }
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("tikhonov: gamma must be positive");
  }
}

namespace {

// argmin ||op e - rhs||^2 + mu ||G e||^2 as the stacked system
// [op; sqrt(mu) G] e = [rhs; 0]. The rank-revealing solve stays sane even
// when the unpenalized block leaves the system singular.
Eigen::VectorXd penalized_solution(const Eigen::MatrixXd& op,
                                   const Eigen::VectorXd& rhs,
                                   const Eigen::VectorXd& g_diag, double mu) {
  const Eigen::Index rows = op.rows();
  const Eigen::Index cols = op.cols();
  Eigen::MatrixXd stacked(rows + cols, cols);
  stacked.topRows(rows) = op;
  stacked.bottomRows(cols) =
      (std::sqrt(mu) * g_diag.array()).matrix().asDiagonal();
  Eigen::VectorXd stacked_rhs = Eigen::VectorXd::Zero(rows + cols);
  stacked_rhs.head(rows) = rhs;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(stacked);
  return cod.solve(stacked_rhs);
}

}  // namespace

TikhonovResult solve_tikhonov(const TikhonovProblem& problem) {
  problem.validate();
  const Eigen::MatrixXd& d = problem.op;
  const Eigen::VectorXd& rhs = problem.rhs;
  const Eigen::VectorXd& g = problem.g_diag;

  TikhonovResult out;

  // Minimum-norm least squares first; if it already satisfies the constraint
  // the multiplier is zero.
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(d);
  const Eigen::VectorXd min_norm = cod.solve(rhs);
  out.solution = min_norm;
  out.constraint_value = (g.array() * min_norm.array()).matrix().squaredNorm();
  if (out.constraint_value <= problem.gamma * (1.0 + 1e-12)) {
    out.multiplier = 0.0;
    out.constraint_active = false;
    out.residual_norm = (d * out.solution - rhs).norm();
    return out;
  }

  // The mu -> 0+ limit of the penalized family is the data-fit minimizer with
  // minimal ||G e|| (the minimizers form an affine set when the system is
  // underdetermined). When even that point satisfies the constraint, ||G e||^2
  // never crosses gamma along mu and the bisection below cannot bracket;
  // return the limit point as the mu = 0 solution.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const Eigen::Index kernel_dim = d.cols() - svd.rank();
  if (kernel_dim > 0) {
    Eigen::VectorXd limit_solution = min_norm;
    const Eigen::MatrixXd kernel = svd.matrixV().rightCols(kernel_dim);
    const Eigen::MatrixXd g_kernel = g.asDiagonal() * kernel;
    const Eigen::VectorXd g_point = g.cwiseProduct(limit_solution);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> shift(g_kernel);
    limit_solution -= kernel * shift.solve(g_point);
    const double limit_value =
        (g.array() * limit_solution.array()).matrix().squaredNorm();
    if (limit_value <= problem.gamma * (1.0 + 1e-12)) {
      out.solution = limit_solution;
      out.constraint_value = limit_value;
      out.multiplier = 0.0;
      out.constraint_active = false;
      out.residual_norm = (d * out.solution - rhs).norm();
      return out;
    }
  }

  // ||G e(mu)||^2 decreases monotonically in mu; expand the upper end until
  // the constraint holds, then bisect to complementary slackness.
  double lo = 0.0;
  double hi = 1.0;
  double hi_value = 0.0;
  bool bracketed = false;
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Eigen::VectorXd e = penalized_solution(d, rhs, g, hi);
    hi_value = (g.array() * e.array()).matrix().squaredNorm();
    if (hi_value <= problem.gamma) {
      bracketed = true;
      break;
    }
    lo = hi;
    hi *= 8.0;
  }
  if (!bracketed) {
    out.solution = penalized_solution(d, rhs, g, hi);
    out.constraint_value = hi_value;
    out.multiplier = hi;
    out.constraint_active = true;
    out.bracketed = false;
    out.residual_norm = (d * out.solution - rhs).norm();
    return out;
  }

  double best_mu = hi;
  Eigen::VectorXd best_solution = penalized_solution(d, rhs, g, hi);
  double best_value = (g.array() * best_solution.array()).matrix().squaredNorm();
  for (int iter = 0; iter < 400; ++iter) {
    const double mu = 0.5 * (lo + hi);
    const Eigen::VectorXd e = penalized_solution(d, rhs, g, mu);
    const double value = (g.array() * e.array()).matrix().squaredNorm();
    if (std::abs(value - problem.gamma) < std::abs(best_value - problem.gamma)) {
      best_mu = mu;
      best_solution = e;
      best_value = value;
    }
    if (value > problem.gamma) {
      lo = mu;
    } else {
      hi = mu;
    }
    if (std::abs(value - problem.gamma) <= 1e-8 * problem.gamma) {
      break;
    }
  }
  out.solution = best_solution;
  out.constraint_value = best_value;
  out.multiplier = best_mu;
  out.constraint_active = true;
  out.residual_norm = (d * out.solution - rhs).norm();
  return out;
}

}  // namespace rdcalib
