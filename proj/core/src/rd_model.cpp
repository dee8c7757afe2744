#include "rdcalib/rd_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "rdcalib/random.hpp"

namespace rdcalib {

ChippingSequence generate_chipping(int length, std::uint64_t seed) {
  if (length < 1) throw std::invalid_argument("generate_chipping: length must be >= 1");
  ChippingSequence out;
  out.seed = seed;
  out.values.resize(static_cast<std::size_t>(length));
  Rng rng(seed);
  for (double& v : out.values) v = rng.rademacher();
  return out;
}

MultitoneSignal generate_multitone(int sparsity, std::uint64_t seed,
                                   double grid_rate_hz, double duration_s) {
  constexpr int kFixedTone = 1500;
  constexpr int kLowestTone = 2;
  constexpr int kAmplitudeMax = 10;
  if (sparsity < 1) throw std::invalid_argument("generate_multitone: need K >= 1");
  if (sparsity - 1 > kFixedTone - 1 - kLowestTone + 1) {
    throw std::invalid_argument("generate_multitone: K exceeds the tone dictionary");
  }
  if (!(grid_rate_hz > 0.0) || !(duration_s > 0.0)) {
    throw std::invalid_argument("generate_multitone: invalid grid rate or duration");
  }
  if (grid_rate_hz < 2.0 * kFixedTone) {
    throw std::invalid_argument(
        "generate_multitone: grid rate must cover the 1500 Hz band edge");
  }

  Rng rng(seed);
  MultitoneSignal out;
  out.grid_rate_hz = grid_rate_hz;
  out.duration_s = duration_s;
  out.tones.reserve(static_cast<std::size_t>(sparsity));
  out.tones.push_back({kFixedTone, static_cast<int>(rng.uniform_int(1, kAmplitudeMax))});

  // Partial Fisher-Yates over {2 .. 1499} picks K-1 distinct random tones.
  std::vector<int> pool(kFixedTone - kLowestTone);
  std::iota(pool.begin(), pool.end(), kLowestTone);
  for (int i = 0; i < sparsity - 1; ++i) {
    const auto j = static_cast<std::size_t>(
        rng.uniform_int(i, static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    out.tones.push_back({pool[static_cast<std::size_t>(i)],
                         static_cast<int>(rng.uniform_int(1, kAmplitudeMax))});
  }

  const auto n = static_cast<Eigen::Index>(std::llround(grid_rate_hz * duration_s));
  out.samples = Eigen::VectorXd::Zero(n);
  for (const Tone& tone : out.tones) {
    const double w = 2.0 * std::numbers::pi * tone.frequency_hz / grid_rate_hz;
    for (Eigen::Index i = 0; i < n; ++i) {
      out.samples(i) += tone.amplitude * std::cos(w * static_cast<double>(i));
    }
  }
  return out;
}

void RdSystem::validate() const {
  if (grid_length < 1 || measurement_count < 1 || subsampling_ratio < 1) {
    throw std::invalid_argument("rd system: dimensions must be positive");
  }
  if (grid_length != measurement_count * subsampling_ratio) {
    throw std::invalid_argument("rd system: N must equal M * R");
  }
  if (chipping.length() != grid_length) {
    throw std::invalid_argument("rd system: chipping length must equal N");
  }
  if (impulse.length() < 1 || impulse.length() > grid_length) {
    throw std::invalid_argument("rd system: impulse length must be in [1, N]");
  }
}

RdSystem make_rd_system(ChippingSequence chipping, ImpulseResponse impulse,
                        int subsampling_ratio) {
  RdSystem system;
  system.grid_length = chipping.length();
  system.subsampling_ratio = subsampling_ratio;
  if (subsampling_ratio < 1 || system.grid_length % subsampling_ratio != 0) {
    throw std::invalid_argument("make_rd_system: N must be a positive multiple of R");
  }
  system.measurement_count = system.grid_length / subsampling_ratio;
  system.chipping = std::move(chipping);
  system.impulse = std::move(impulse);
  system.validate();
  return system;
}

namespace {

template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> apply_phi_impl(
    const RdSystem& system, const Eigen::Vector<Scalar, Eigen::Dynamic>& x) {
  system.validate();
  if (x.size() != system.grid_length) {
    throw std::invalid_argument("apply_phi: signal length must equal N");
  }
  const auto& h = system.impulse.samples;
  const auto& p = system.chipping.values;
  const int filter_len = system.impulse.length();
  const int ratio = system.subsampling_ratio;

  Eigen::Vector<Scalar, Eigen::Dynamic> y(system.measurement_count);
  for (int m = 0; m < system.measurement_count; ++m) {
    const int pick = m * ratio;
    const int l_max = std::min(filter_len - 1, pick);
    Scalar acc{};
    for (int l = 0; l <= l_max; ++l) {
      const int n = pick - l;
      acc += h[static_cast<std::size_t>(l)] * p[static_cast<std::size_t>(n)] * x(n);
    }
    y(m) = acc;
  }
  return y;
}

template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> apply_phi_adjoint_impl(
    const RdSystem& system, const Eigen::Vector<Scalar, Eigen::Dynamic>& y) {
  system.validate();
  if (y.size() != system.measurement_count) {
    throw std::invalid_argument("apply_phi_adjoint: measurement length must equal M");
  }
  const auto& h = system.impulse.samples;
  const auto& p = system.chipping.values;
  const int filter_len = system.impulse.length();
  const int ratio = system.subsampling_ratio;

  Eigen::Vector<Scalar, Eigen::Dynamic> out =
      Eigen::Vector<Scalar, Eigen::Dynamic>::Zero(system.grid_length);
  for (int m = 0; m < system.measurement_count; ++m) {
    const int pick = m * ratio;
    const int l_max = std::min(filter_len - 1, pick);
    const Scalar value = y(m);
    for (int l = 0; l <= l_max; ++l) {
      const int n = pick - l;
      out(n) += h[static_cast<std::size_t>(l)] * value;
    }
  }
  for (int n = 0; n < system.grid_length; ++n) {
    out(n) *= p[static_cast<std::size_t>(n)];
  }
  return out;
}

}  // namespace

Eigen::VectorXd apply_phi(const RdSystem& system, const Eigen::VectorXd& x) {
  return apply_phi_impl<double>(system, x);
}

Eigen::VectorXcd apply_phi(const RdSystem& system, const Eigen::VectorXcd& x) {
  return apply_phi_impl<std::complex<double>>(system, x);
}

Eigen::VectorXd apply_phi_adjoint(const RdSystem& system, const Eigen::VectorXd& y) {
  return apply_phi_adjoint_impl<double>(system, y);
}

Eigen::VectorXcd apply_phi_adjoint(const RdSystem& system, const Eigen::VectorXcd& y) {
  return apply_phi_adjoint_impl<std::complex<double>>(system, y);
}

Eigen::MatrixXd dense_phi(const RdSystem& system) {
  system.validate();
  const double entries = static_cast<double>(system.measurement_count) *
                         static_cast<double>(system.grid_length);
  if (entries > 5e7) {
    throw std::invalid_argument("dense_phi: M*N exceeds the materialization guard (5e7)");
  }
  Eigen::MatrixXd phi =
      Eigen::MatrixXd::Zero(system.measurement_count, system.grid_length);
  const auto& h = system.impulse.samples;
  const auto& p = system.chipping.values;
  for (int m = 0; m < system.measurement_count; ++m) {
    const int pick = m * system.subsampling_ratio;
    const int l_max = std::min(system.impulse.length() - 1, pick);
    for (int l = 0; l <= l_max; ++l) {
      const int n = pick - l;
      phi(m, n) = h[static_cast<std::size_t>(l)] * p[static_cast<std::size_t>(n)];
    }
  }
  return phi;
}

}  // namespace rdcalib
