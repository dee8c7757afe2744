#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "rdcalib/errors.hpp"
#include "rdcalib/least_squares.hpp"
#include "rdcalib/random.hpp"

using namespace rdcalib;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = rng.normal();
  }
  return out;
}

Eigen::VectorXd random_vector(int n, Rng& rng) {
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out(i) = rng.normal();
  return out;
}

}  // namespace

TEST_CASE("orthonormal columns reduce least squares to a transpose product") {
  Rng rng(1);
  const Eigen::MatrixXd raw = random_matrix(40, 12, rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(40, 12);
  const Eigen::VectorXd rhs = random_vector(40, rng);
  const auto result = solve_least_squares(q, rhs);
  CHECK((result.solution - q.transpose() * rhs).norm() < 1e-12);
}

TEST_CASE("planted solutions are recovered exactly") {
  Rng rng(2);
  const Eigen::MatrixXd op = random_matrix(60, 20, rng);
  const Eigen::VectorXd truth = random_vector(20, rng);
  const auto result = solve_least_squares(op, op * truth);
  CHECK((result.solution - truth).norm() < 1e-10 * truth.norm());
  CHECK(result.residual_norm < 1e-10);
}

TEST_CASE("right-hand sides orthogonal to the range give the zero solution") {
  Rng rng(3);
  const Eigen::MatrixXd op = random_matrix(30, 8, rng);
  Eigen::VectorXd rhs = random_vector(30, rng);
  // strip the range component
  const Eigen::MatrixXd q =
      Eigen::HouseholderQR<Eigen::MatrixXd>(op).householderQ() *
      Eigen::MatrixXd::Identity(30, 8);
  rhs -= q * (q.transpose() * rhs);
  const auto result = solve_least_squares(op, rhs);
  CHECK(result.solution.norm() < 1e-10);
}

TEST_CASE("normal-equation residual is driven to numerical zero") {
  Rng rng(4);
  const Eigen::MatrixXd op = random_matrix(80, 25, rng);
  const Eigen::VectorXd rhs = random_vector(80, rng);
  const auto result = solve_least_squares(op, rhs);
  const Eigen::VectorXd normal_residual = op.transpose() * (op * result.solution - rhs);
  CHECK(normal_residual.norm() < 1e-8 * (op.transpose() * rhs).norm());
}

TEST_CASE("no random perturbation improves the least-squares objective") {
  Rng rng(5);
  const Eigen::MatrixXd op = random_matrix(50, 15, rng);
  const Eigen::VectorXd rhs = random_vector(50, rng);
  const auto result = solve_least_squares(op, rhs);
  const double base = (op * result.solution - rhs).squaredNorm();
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd delta = random_vector(15, rng);
    delta *= 1e-6 / delta.norm();
    const double shifted = (op * (result.solution + delta) - rhs).squaredNorm();
    CHECK(shifted >= base);
  }
}

TEST_CASE("rank-deficient operators are refused") {
  Rng rng(6);
  Eigen::MatrixXd op = random_matrix(30, 10, rng);
  op.col(7) = 2.0 * op.col(3) - op.col(1);  // exact linear dependence
  CHECK_THROWS_AS(solve_least_squares(op, random_vector(30, rng)), DeficientRankError);
  CHECK_THROWS_AS(solve_least_squares(random_matrix(5, 10, rng), random_vector(5, rng)),
                  DeficientRankError);
}

TEST_CASE("inactive constraints reduce the regularized problem to least squares") {
  Rng rng(7);
  TikhonovProblem problem;
  problem.op = random_matrix(40, 12, rng);
  problem.rhs = random_vector(40, rng);
  problem.g_diag = Eigen::VectorXd::Ones(12);
  problem.gamma = 1e12;  // effectively unconstrained
  const auto result = solve_tikhonov(problem);
  CHECK(result.multiplier == 0.0);
  CHECK_FALSE(result.constraint_active);
  const auto plain = solve_least_squares(problem.op, problem.rhs);
  CHECK((result.solution - plain.solution).norm() < 1e-8 * plain.solution.norm());
}

TEST_CASE("identity problem with a small ball is radial shrinkage") {
  Rng rng(8);
  const int n = 10;
  TikhonovProblem problem;
  problem.op = Eigen::MatrixXd::Identity(n, n);
  problem.rhs = random_vector(n, rng);
  problem.g_diag = Eigen::VectorXd::Ones(n);
  problem.gamma = 0.25 * problem.rhs.squaredNorm();
  const auto result = solve_tikhonov(problem);
  const Eigen::VectorXd expected =
      problem.rhs * std::sqrt(problem.gamma) / problem.rhs.norm();
  CHECK((result.solution - expected).norm() < 1e-5 * expected.norm());
  CHECK(result.constraint_active);
}

TEST_CASE("kkt conditions hold at the regularized solution") {
  Rng rng(9);
  for (int instance = 0; instance < 10; ++instance) {
    const int rows = 12 + static_cast<int>(rng.uniform_int(0, 8));
    const int cols = rows + 6;  // underdetermined, as in the small-sample branch
    TikhonovProblem problem;
    problem.op = random_matrix(rows, cols, rng);
    problem.rhs = random_vector(rows, rng);
    problem.g_diag = Eigen::VectorXd::Zero(cols);
    problem.g_diag.head(cols / 2).setOnes();
    problem.gamma = 0.3 + rng.uniform01();
    const auto result = solve_tikhonov(problem);
    if (result.multiplier == 0.0) {
      CHECK(result.constraint_value <= problem.gamma * (1.0 + 1e-9));
    } else {
      CHECK(std::abs(result.constraint_value - problem.gamma) < 1e-6 * problem.gamma);
    }
  }
}

TEST_CASE("unpenalized coordinates are free") {
  Rng rng(10);
  const int rows = 8, cols = 12;
  TikhonovProblem problem;
  problem.op = random_matrix(rows, cols, rng);
  problem.rhs = random_vector(rows, rng);
  problem.g_diag = Eigen::VectorXd::Zero(cols);
  problem.g_diag.head(cols / 2).setOnes();
  problem.gamma = 1e-6;  // forces a large multiplier onto the penalized half
  const auto result = solve_tikhonov(problem);
  // the penalized half collapses, the free half still fits the data
  CHECK(result.constraint_value <= problem.gamma * (1.0 + 1e-6));
  const double free_norm = result.solution.tail(cols - cols / 2).norm();
  CHECK(free_norm > 1e-3);
}

TEST_CASE("problem validation rejects malformed inputs") {
  TikhonovProblem problem;
  problem.op = Eigen::MatrixXd::Identity(4, 4);
  problem.rhs = Eigen::VectorXd::Ones(4);
  problem.g_diag = Eigen::VectorXd::Ones(4);
  problem.gamma = 0.0;
  CHECK_THROWS_AS(solve_tikhonov(problem), std::invalid_argument);
  problem.gamma = 1.0;
  problem.g_diag(2) = 0.5;
  CHECK_THROWS_AS(solve_tikhonov(problem), std::invalid_argument);
}
