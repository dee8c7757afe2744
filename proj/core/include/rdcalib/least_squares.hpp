#pragma once

#include <Eigen/Dense>

namespace rdcalib {

struct LeastSquaresResult {
  Eigen::VectorXd solution;
  double residual_norm = 0.0;
};

// Ordinary least squares via column-pivoted QR. Requires rows >= cols and a
// numerically full-rank operator (condition estimate below 1e10), otherwise
// throws DeficientRankError so callers can fall back to the regularized path.
LeastSquaresResult solve_least_squares(const Eigen::MatrixXd& op,
                                       const Eigen::VectorXd& rhs);

// minimize ||op e - rhs||^2  subject to  ||G e||^2 <= gamma,
// with a diagonal 0/1 regularization operator G. Entries with g = 0 are never
// penalized.
struct TikhonovProblem {
  Eigen::MatrixXd op;
  Eigen::VectorXd rhs;
  Eigen::VectorXd g_diag;  // 0/1 diagonal of G
  double gamma = 0.0;

  void validate() const;
};

struct TikhonovResult {
  Eigen::VectorXd solution;
  double residual_norm = 0.0;
  double multiplier = 0.0;        // mu in the penalized form
  double constraint_value = 0.0;  // ||G e||^2 at the solution
  bool constraint_active = false;
  bool bracketed = true;  // false when bisection could not bracket and the
                          // boundary solution was returned
};

// Solves the constrained problem through its penalized form
//   e(mu) = argmin ||op e - rhs||^2 + mu ||G e||^2,
// with mu = 0 when the minimum-norm least-squares solution already satisfies
// the constraint, otherwise mu > 0 found by bisection so that
// ||G e||^2 = gamma (complementary slackness).
TikhonovResult solve_tikhonov(const TikhonovProblem& problem);

}  // namespace rdcalib
