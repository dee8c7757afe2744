#include "rdcalib/bpdn.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace rdcalib {

Eigen::VectorXcd project_l1_ball(const Eigen::VectorXcd& v, double radius) {
  if (radius < 0.0) throw std::invalid_argument("project_l1_ball: negative radius");
  const Eigen::Index n = v.size();
  Eigen::VectorXd moduli = v.cwiseAbs();
  const double total = moduli.sum();
  if (total <= radius) return v;
  if (radius == 0.0) return Eigen::VectorXcd::Zero(n);

  // Simplex projection of the moduli (sort + running prefix threshold);
  // phases are preserved.
  std::vector<double> sorted(moduli.data(), moduli.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double prefix = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    prefix += sorted[static_cast<std::size_t>(k)];
    const double candidate = (prefix - radius) / static_cast<double>(k + 1);
    if (k + 1 == n || sorted[static_cast<std::size_t>(k + 1)] <= candidate) {
      theta = candidate;
      break;
    }
  }

  Eigen::VectorXcd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = moduli(i);
    const double shrunk = m - theta;
    out(i) = (shrunk > 0.0 && m > 0.0) ? v(i) * (shrunk / m)
                                       : std::complex<double>(0.0, 0.0);
  }
  return out;
}

BpdnResult solve_bpdn(const ComplexLinearOperator& op, const Eigen::VectorXcd& y,
                      const BpdnConfig& config) {
  if (config.zeta < 0.0) throw std::invalid_argument("solve_bpdn: zeta must be >= 0");
  if (config.max_iterations < 1) {
    throw std::invalid_argument("solve_bpdn: max_iterations must be >= 1");
  }
  if (y.size() != op.rows()) {
    throw std::invalid_argument("solve_bpdn: measurement length mismatch");
  }

  const double opt_tol = config.optimality_tolerance;
  const double sigma = config.zeta;
  const Eigen::Index n = op.cols();

  BpdnResult result;
  result.coefficients = Eigen::VectorXcd::Zero(n);

  // alpha = 0 is already optimal when the zero residual satisfies the bound.
  if (y.norm() <= sigma) {
    result.converged = true;
    result.residual_norm = y.norm();
    result.trace.push_back({0, result.residual_norm, 0.0, false});
    return result;
  }

  Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd residual = y;
  Eigen::VectorXcd gradient = -op.apply_adjoint(residual);
  double f = 0.5 * residual.squaredNorm();
  double tau = 0.0;
  double step = 1.0;
  constexpr double kStepMin = 1e-10;
  constexpr double kStepMax = 1e10;
  constexpr std::size_t kMemory = 10;
  std::deque<double> recent_f{f};

  double best_residual = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_alpha = alpha;

  int iteration = 0;
  bool stalled = false;
  for (; iteration < config.max_iterations && !stalled; ++iteration) {
    const double residual_norm = std::sqrt(2.0 * f);
    const double dual_norm = gradient.cwiseAbs().maxCoeff();
    const double one_norm = alpha.cwiseAbs().sum();

    if (residual_norm < best_residual) {
      best_residual = residual_norm;
      best_alpha = alpha;
    }

    // Duality gap of the current LASSO(tau) subproblem.
    const double gap = residual.dot(residual - y).real() + tau * dual_norm;
    const double relative_gap = std::abs(gap) / std::max(1.0, f);

    result.trace.push_back({iteration, residual_norm, one_norm, false});

    // The fidelity contract: stop once the bound holds (with a machine floor
    // for zeta = 0 problems).
    if (residual_norm <= std::max(sigma * (1.0 + opt_tol), 1e-12 * y.norm())) {
      result.converged = true;
      break;
    }

    bool subproblem_done = relative_gap <= opt_tol;

    Eigen::VectorXcd direction;
    if (!subproblem_done) {
      direction = project_l1_ball(alpha - step * gradient, tau) - alpha;
      if (direction.norm() <= 1e-15 * std::max(1.0, alpha.norm())) {
        subproblem_done = true;  // stationary on the current ball
      }
    }

    if (subproblem_done) {
      // Newton step on the Pareto curve: tau+ = tau + (phi - zeta) phi / ||A^H r||_inf.
      const double tau_next =
          std::max(0.0, tau + residual_norm * (residual_norm - sigma) /
                                  std::max(dual_norm, 1e-300));
      if (std::abs(tau_next - tau) <= 1e-12 * std::max(1.0, tau)) {
        stalled = true;  // the radius cannot move; return the best iterate
        break;
      }
      tau = tau_next;
      result.trace.back().radius_update = true;
      recent_f.assign(1, f);
      Eigen::VectorXcd projected = project_l1_ball(alpha, tau);
      if ((projected - alpha).norm() > 0.0) {
        // The radius shrank below the iterate: restart the subproblem there.
        alpha = std::move(projected);
        residual = y - op.apply(alpha);
        gradient = -op.apply_adjoint(residual);
        f = 0.5 * residual.squaredNorm();
        recent_f.assign(1, f);
        step = 1.0;
        continue;
      }
      // Interior iterate: take a gradient step on the enlarged ball right
      // away (a bare radius bump would leave the state unchanged).
      direction = project_l1_ball(alpha - step * gradient, tau) - alpha;
      if (direction.norm() <= 1e-15 * std::max(1.0, alpha.norm())) {
        stalled = true;
        break;
      }
    }

    // Spectral projected gradient step on LASSO(tau). The objective along the
    // feasible segment alpha + t d is an exact quadratic in t, so the
    // nonmonotone line search needs no extra operator applications.
    const Eigen::VectorXcd a_direction = op.apply(direction);
    const double gtd = gradient.dot(direction).real();
    const double r_dot_ad = residual.dot(a_direction).real();
    const double ad_sq = a_direction.squaredNorm();

    const double f_max = *std::max_element(recent_f.begin(), recent_f.end());
    double t = 1.0;
    bool accepted = false;
    for (int backtrack = 0; backtrack < 32; ++backtrack) {
      const double f_trial = f - t * r_dot_ad + 0.5 * t * t * ad_sq;
      if (f_trial <= f_max + 1e-4 * t * gtd) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted && ad_sq > 0.0) {
      t = std::clamp(r_dot_ad / ad_sq, 0.0, 1.0);
    }

    const Eigen::VectorXcd alpha_next = alpha + t * direction;
    residual -= t * a_direction;
    const Eigen::VectorXcd gradient_next = -op.apply_adjoint(residual);
    f = 0.5 * residual.squaredNorm();
    recent_f.push_back(f);
    if (recent_f.size() > kMemory) recent_f.pop_front();

    // Barzilai-Borwein step length for the next iteration.
    const double s_dot_v = (t * direction).dot(gradient_next - gradient).real();
    const double s_sq = t * t * direction.squaredNorm();
    step = (s_dot_v > 1e-300) ? std::clamp(s_sq / s_dot_v, kStepMin, kStepMax)
                              : kStepMax;
    alpha = alpha_next;
    gradient = gradient_next;
  }

  if (result.converged) {
    result.coefficients = alpha;
    result.residual_norm = std::sqrt(2.0 * f);
  } else {
    const double final_norm = std::sqrt(2.0 * f);
    if (final_norm < best_residual) {
      best_residual = final_norm;
      best_alpha = alpha;
    }
    result.coefficients = best_alpha;
    result.residual_norm = best_residual;
  }
  result.one_norm = result.coefficients.cwiseAbs().sum();
  result.iterations = iteration;
  return result;
}

}  // namespace rdcalib
