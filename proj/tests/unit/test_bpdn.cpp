#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <set>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/experiments.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/random.hpp"
#include "rdcalib/rd_model.hpp"

using namespace rdcalib;

TEST_CASE("complex l1 projection") {
  SUBCASE("inside points are untouched") {
    Eigen::VectorXcd v(2);
    v << std::complex<double>(0.5, 0.0), std::complex<double>(0.0, 0.5);
    const Eigen::VectorXcd p = project_l1_ball(v, 2.0);
    CHECK((p - v).norm() == 0.0);
  }
  SUBCASE("known real case") {
    Eigen::VectorXcd v(2);
    v << 3.0, 1.0;
    const Eigen::VectorXcd p = project_l1_ball(v, 2.0);
    CHECK(std::abs(p(0) - 2.0) < 1e-12);
    CHECK(std::abs(p(1)) < 1e-12);
  }
  SUBCASE("result lands on the ball and keeps phases") {
    Rng rng(3);
    Eigen::VectorXcd v(64);
    for (int i = 0; i < 64; ++i) v(i) = {rng.normal(), rng.normal()};
    const double radius = 0.3 * v.cwiseAbs().sum();
    const Eigen::VectorXcd p = project_l1_ball(v, radius);
    CHECK(p.cwiseAbs().sum() == doctest::Approx(radius).epsilon(1e-10));
    for (int i = 0; i < 64; ++i) {
      if (std::abs(p(i)) > 1e-12) {
        const auto phase_ratio = p(i) / v(i);
        CHECK(std::abs(phase_ratio.imag()) < 1e-12);
        CHECK(phase_ratio.real() > 0.0);
      }
    }
  }
}

TEST_CASE("zero measurements with a zero bound give the zero solution") {
  const DenseComplexOperator op(Eigen::MatrixXcd::Identity(8, 8));
  BpdnConfig config;
  config.zeta = 0.0;
  const auto result = solve_bpdn(op, Eigen::VectorXcd::Zero(8), config);
  CHECK(result.converged);
  CHECK(result.coefficients.norm() == 0.0);
}

TEST_CASE("identity operator reproduces the measurements") {
  Rng rng(5);
  const int n = 24;
  Eigen::VectorXcd y(n);
  for (int i = 0; i < n; ++i) y(i) = {rng.normal(), rng.normal()};
  const DenseComplexOperator op(Eigen::MatrixXcd::Identity(n, n));
  BpdnConfig config;
  config.zeta = 0.0;
  config.optimality_tolerance = 1e-6;
  const auto result = solve_bpdn(op, y, config);
  CHECK((result.coefficients - y).norm() < 1e-3 * y.norm());
}

TEST_CASE("single-tone reconstruction on an exact model") {
  // Small random-demodulator instance: the model used for reconstruction is
  // exactly the system that produced the measurements.
  const double grid_rate = 4200.0;
  const double duration = 0.1;
  const int n = 420, ratio = 6;
  const auto chip = generate_chipping(n, 7);
  const auto h = accumulate_and_dump_response(ratio);
  const RdSystem system = make_rd_system(chip, h, ratio);
  const auto signal = generate_multitone(1, 42, grid_rate, duration);
  const Eigen::VectorXd y = apply_phi(system, signal.samples);

  const FourierDictionary dictionary(n);
  const RdSynthesisOperator op(system, &dictionary);
  BpdnConfig config;
  config.zeta = 1e-6 * y.norm();
  const auto result = solve_bpdn(op, y.cast<std::complex<double>>(), config);
  CHECK(result.converged);

  // support contains the conjugate bin pair of the 1500 Hz tone
  const int bin = static_cast<int>(1500 * duration);
  const double peak = result.coefficients.cwiseAbs().maxCoeff();
  CHECK(std::abs(result.coefficients(bin)) > 0.5 * peak);
  CHECK(std::abs(result.coefficients(n - bin)) > 0.5 * peak);

  const Eigen::VectorXd recovered = dictionary.synthesize_real(result.coefficients);
  CHECK(snr_db(signal.samples, recovered) > 80.0);
}

TEST_CASE("the residual is non-increasing across radius updates") {
  Rng rng(11);
  const int m = 40, n = 120;
  Eigen::MatrixXcd a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = {rng.normal(), rng.normal()};
  }
  Eigen::VectorXcd truth = Eigen::VectorXcd::Zero(n);
  for (int k = 0; k < 4; ++k) {
    truth(rng.uniform_int(0, n - 1)) = {rng.normal(), rng.normal()};
  }
  const Eigen::VectorXcd y = a * truth;
  const DenseComplexOperator op(a);
  BpdnConfig config;
  config.zeta = 1e-8 * y.norm();
  const auto result = solve_bpdn(op, y, config);

  double previous = std::numeric_limits<double>::infinity();
  for (const auto& point : result.trace) {
    if (point.radius_update) {
      CHECK(point.residual_norm <= previous * (1.0 + 1e-9));
      previous = point.residual_norm;
    }
  }
  CHECK(result.converged);
  CHECK((a * result.coefficients - y).norm() <= config.zeta * (1.0 + 1e-2) + 1e-9);
}

TEST_CASE("real-valued problems come back essentially real") {
  Rng rng(13);
  const int m = 30, n = 80;
  Eigen::MatrixXd a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  }
  Eigen::VectorXd truth = Eigen::VectorXd::Zero(n);
  truth(3) = 2.0;
  truth(41) = -1.0;
  truth(77) = 0.5;
  const Eigen::VectorXd y = a * truth;
  const DenseComplexOperator op(a.cast<std::complex<double>>());
  BpdnConfig config;
  config.zeta = 1e-8 * y.norm();
  const auto result = solve_bpdn(op, y.cast<std::complex<double>>(), config);
  CHECK(result.coefficients.imag().cwiseAbs().maxCoeff() <
        1e-6 * result.coefficients.cwiseAbs().maxCoeff());
  CHECK((result.coefficients.real() - truth).norm() < 1e-3 * truth.norm());
}

TEST_CASE("global phase rotations do not change the solution modulus") {
  Rng rng(17);
  const int m = 24, n = 60;
  Eigen::MatrixXcd a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = {rng.normal(), rng.normal()};
  }
  Eigen::VectorXcd truth = Eigen::VectorXcd::Zero(n);
  truth(5) = {1.0, -0.5};
  truth(30) = {-0.3, 0.8};
  const Eigen::VectorXcd y = a * truth;
  BpdnConfig config;
  config.zeta = 1e-8 * y.norm();
  const auto base = solve_bpdn(DenseComplexOperator(a), y, config);

  const std::complex<double> rotation = std::polar(1.0, 0.83);
  const auto rotated = solve_bpdn(DenseComplexOperator(rotation * a), y, config);
  CHECK((base.coefficients.cwiseAbs() - rotated.coefficients.cwiseAbs()).norm() <
        1e-6 * base.coefficients.norm());
}

TEST_CASE("the iteration cap returns the best iterate with a flag") {
  Rng rng(19);
  const int m = 24, n = 60;
  Eigen::MatrixXcd a(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = {rng.normal(), rng.normal()};
  }
  Eigen::VectorXcd y(m);
  for (int i = 0; i < m; ++i) y(i) = {rng.normal(), rng.normal()};
  BpdnConfig config;
  config.zeta = 1e-12;  // unreachable in 3 iterations
  config.max_iterations = 3;
  const auto result = solve_bpdn(DenseComplexOperator(a), y, config);
  CHECK_FALSE(result.converged);
  CHECK(result.iterations == 3);
  CHECK(result.residual_norm <= y.norm() * (1.0 + 1e-12));
}
