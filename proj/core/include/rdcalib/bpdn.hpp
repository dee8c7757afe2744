#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rdcalib/linear_operator.hpp"

namespace rdcalib {

struct BpdnConfig {
  double zeta = 0.0;                    // residual bound of the fidelity constraint
  int max_iterations = 2500;            // total projected-gradient iteration budget
  double optimality_tolerance = 1e-4;   // relative tolerance on the Pareto root
};

struct BpdnTracePoint {
  int iteration = 0;
  double residual_norm = 0.0;
  double one_norm = 0.0;
  bool radius_update = false;  // marks the outer (Pareto root-finding) steps
};

struct BpdnResult {
  Eigen::VectorXcd coefficients;
  int iterations = 0;
  bool converged = false;      // false when the iteration cap was reached
  double residual_norm = 0.0;
  double one_norm = 0.0;
  std::vector<BpdnTracePoint> trace;
};

// Basis pursuit denoising over complex coefficients:
//
//   minimize ||alpha||_1  subject to  ||y - A alpha||_2 <= zeta
//
// solved by root finding on the Pareto curve phi(tau) = min{||y - A alpha|| :
// ||alpha||_1 <= tau}, with each LASSO subproblem handled by a spectral
// (Barzilai-Borwein) projected gradient iteration. The one-norm of a complex
// vector is the sum of moduli, and the dual norm used for the Newton step on
// tau is the max modulus of A^H r. When the iteration budget runs out the best
// iterate seen (smallest residual) is returned with converged = false.
BpdnResult solve_bpdn(const ComplexLinearOperator& op, const Eigen::VectorXcd& y,
                      const BpdnConfig& config);

// Projects onto the complex l1 ball of the given radius: the moduli are
// projected onto the simplex-bounded set and phases are preserved. Exposed
// for testing.
Eigen::VectorXcd project_l1_ball(const Eigen::VectorXcd& v, double radius);

}  // namespace rdcalib
