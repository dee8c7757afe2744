#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rdcalib/discretize.hpp"
#include "rdcalib/errors.hpp"
#include "rdcalib/lc_ladder.hpp"
#include "rdcalib/random.hpp"

using namespace rdcalib;

namespace {

// Independent oracle: run a unit impulse through the difference equation of
// H(z) = (sum b_l z^-l) / (sum a_l z^-l) directly.
std::vector<double> difference_equation_impulse(const std::vector<double>& b,
                                                const std::vector<double>& a,
                                                int length) {
  std::vector<double> h(static_cast<std::size_t>(length), 0.0);
  for (int n = 0; n < length; ++n) {
    double acc = n < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(n)] : 0.0;
    for (std::size_t k = 1; k < a.size(); ++k) {
      if (n >= static_cast<int>(k)) {
        acc -= a[k] * h[static_cast<std::size_t>(n - static_cast<int>(k))];
      }
    }
    h[static_cast<std::size_t>(n)] = acc / a[0];
  }
  return h;
}

RationalTransferFunction discrete_tf(std::vector<double> b, std::vector<double> a,
                                     double rate) {
  RationalTransferFunction tf;
  tf.numerator = std::move(b);
  tf.denominator = std::move(a);
  tf.domain = TfDomain::kDiscreteZ;
  tf.sample_period_s = 1.0 / rate;
  return tf;
}

}  // namespace

TEST_CASE("bilinear transform of 1/(s+1) at T = 2 gives (1 + z^-1)/2") {
  RationalTransferFunction analog;
  analog.numerator = {1.0};
  analog.denominator = {1.0, 1.0};
  const auto discrete = bilinear_transform(analog, 0.5);
  REQUIRE(discrete.numerator.size() == 2);
  CHECK(discrete.numerator[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(discrete.numerator[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(discrete.denominator[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(discrete.denominator[1]) < 1e-14);
  CHECK(discrete.sample_period_s == doctest::Approx(2.0));
}

TEST_CASE("bilinear transform preserves the dc gain") {
  for (FilterApproximation kind :
       {FilterApproximation::kButterworth, FilterApproximation::kChebyshev}) {
    const auto analog = lc_transfer_function(synthesize_nominal(kind));
    const auto discrete = bilinear_transform(analog, 12600.0);
    CHECK(std::abs(discrete.evaluate_z({1.0, 0.0}) - analog.evaluate_s({0.0, 0.0})) <
          1e-12);
  }
}

TEST_CASE("bilinear transform satisfies the tangent frequency mapping") {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const double rate = 13000.0;
  const double period = 1.0 / rate;
  const auto discrete = bilinear_transform(analog, rate);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const double omega = 2.0 * std::numbers::pi * 6000.0 * rng.uniform01();
    const std::complex<double> z = std::exp(std::complex<double>(0.0, omega * period));
    const std::complex<double> s_mapped(0.0, (2.0 / period) * std::tan(omega * period / 2.0));
    const auto lhs = discrete.evaluate_z(z);
    const auto rhs = analog.evaluate_s(s_mapped);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("prewarping pins the response at the chosen frequency") {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const double rate = 13000.0;
  const double f0 = 500.0;
  const auto discrete = bilinear_transform(analog, rate, f0);
  const double omega0 = 2.0 * std::numbers::pi * f0;
  const std::complex<double> z =
      std::exp(std::complex<double>(0.0, omega0 / rate));
  CHECK(std::abs(discrete.evaluate_z(z) - analog.evaluate_s({0.0, omega0})) < 1e-12);
}

TEST_CASE("stable prototypes discretize to stable systems") {
  for (double rate : {12600.0, 13000.0}) {
    const auto analog =
        lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
    const auto form = partial_fractions(bilinear_transform(analog, rate));
    REQUIRE(form.poles.size() == 4);
    for (const auto& q : form.poles) CHECK(std::abs(q) < 1.0);
    CHECK(form.stable());
  }
}

TEST_CASE("degenerate mappings are reported") {
  RationalTransferFunction improper;
  improper.numerator = {1.0, 1.0};
  improper.denominator = {1.0, 1.0};
  CHECK_THROWS_AS(bilinear_transform(improper, 100.0), std::invalid_argument);

  // An analog pole exactly at s = +2/T lands on |z| -> infinity and zeroes the
  // constant denominator coefficient.
  RationalTransferFunction right_half;
  const double rate = 1.0;
  const double k = 2.0 * rate;
  right_half.numerator = {1.0};
  right_half.denominator = {-k * k, 0.0, 1.0};
  CHECK_THROWS_AS(bilinear_transform(right_half, rate), DegenerateMappingError);
}

TEST_CASE("partial fractions of a two-pole product give the cover-up residues") {
  // 1 / ((1 - 0.5 z^-1)(1 - 0.25 z^-1)) = 2/(1 - 0.5 z^-1) - 1/(1 - 0.25 z^-1)
  const auto tf = discrete_tf({1.0}, {1.0, -0.75, 0.125}, 1.0);
  const auto form = partial_fractions(tf);
  REQUIRE(form.poles.size() == 2);
  const bool first_is_half = std::abs(form.poles[0] - 0.5) < 1e-12;
  const auto& q_half = first_is_half ? form.poles[0] : form.poles[1];
  const auto& u_half = first_is_half ? form.residues[0] : form.residues[1];
  const auto& q_quarter = first_is_half ? form.poles[1] : form.poles[0];
  const auto& u_quarter = first_is_half ? form.residues[1] : form.residues[0];
  CHECK(std::abs(q_half - 0.5) < 1e-12);
  CHECK(std::abs(q_quarter - 0.25) < 1e-12);
  CHECK(std::abs(u_half - 2.0) < 1e-12);
  CHECK(std::abs(u_quarter - (-1.0)) < 1e-12);
}

TEST_CASE("single-pole system has its scale as the only residue") {
  const auto form = partial_fractions(discrete_tf({3.0}, {1.0, -0.5}, 1.0));
  REQUIRE(form.poles.size() == 1);
  CHECK(std::abs(form.poles[0] - 0.5) < 1e-14);
  CHECK(std::abs(form.residues[0] - 3.0) < 1e-14);
}

TEST_CASE("fourth-order ladder discretization yields conjugate pole pairs") {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kChebyshev));
  const auto form = partial_fractions(bilinear_transform(analog, 12600.0));
  REQUIRE(form.poles.size() == 4);
  int matched = 0;
  for (std::size_t i = 0; i < form.poles.size(); ++i) {
    for (std::size_t j = 0; j < form.poles.size(); ++j) {
      if (i == j) continue;
      if (std::abs(form.poles[i] - std::conj(form.poles[j])) < 1e-10 &&
          std::abs(form.residues[i] - std::conj(form.residues[j])) < 1e-10) {
        ++matched;
        break;
      }
    }
  }
  CHECK(matched == 4);
}

TEST_CASE("repeated poles are rejected") {
  // (1 - 0.5 z^-1)^2 in the denominator
  CHECK_THROWS_AS(partial_fractions(discrete_tf({1.0}, {1.0, -1.0, 0.25}, 1.0)),
                  RepeatedPoleError);
}

TEST_CASE("pole-residue form reproduces the transfer function on the unit circle") {
  for (FilterApproximation kind :
       {FilterApproximation::kButterworth, FilterApproximation::kChebyshev}) {
    const auto analog = lc_transfer_function(synthesize_nominal(kind));
    const auto discrete = bilinear_transform(analog, 12600.0);
    const auto form = partial_fractions(discrete);
    Rng rng(17);
    // Relative to the response scale on the circle; point-wise relative error
    // is meaningless deep in the stopband where |H| underflows the achievable
    // absolute accuracy.
    double scale = 0.0;
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      const double angle = 2.0 * std::numbers::pi * rng.uniform01();
      const std::complex<double> z = std::exp(std::complex<double>(0.0, angle));
      const auto direct = discrete.evaluate_z(z);
      const auto expanded = form.evaluate_z(z);
      scale = std::max(scale, std::abs(direct));
      worst = std::max(worst, std::abs(direct - expanded));
    }
    CHECK(worst <= 1e-10 * scale);
  }
}

TEST_CASE("impulse response of a single pole is the geometric sequence") {
  PoleResidueForm form;
  form.poles = {{0.5, 0.0}};
  form.residues = {{1.0, 0.0}};
  form.sample_rate_hz = 1.0;
  const auto h = impulse_response(form, 4);
  REQUIRE(h.length() == 4);
  CHECK(h.samples[0] == doctest::Approx(1.0));
  CHECK(h.samples[1] == doctest::Approx(0.5));
  CHECK(h.samples[2] == doctest::Approx(0.25));
  CHECK(h.samples[3] == doctest::Approx(0.125));
}

TEST_CASE("impulse response matches direct recursive filtering") {
  for (FilterApproximation kind :
       {FilterApproximation::kButterworth, FilterApproximation::kChebyshev}) {
    const auto analog = lc_transfer_function(synthesize_nominal(kind));
    const auto discrete = bilinear_transform(analog, 12600.0);
    const auto form = partial_fractions(discrete);
    const int length = kind == FilterApproximation::kButterworth ? 108 : 228;
    const auto h = impulse_response(form, length);
    const auto oracle =
        difference_equation_impulse(discrete.numerator, discrete.denominator, length);
    double scale = 0.0;
    for (double v : oracle) scale = std::max(scale, std::abs(v));
    for (int l = 0; l < length; ++l) {
      CHECK(std::abs(h.samples[static_cast<std::size_t>(l)] -
                     oracle[static_cast<std::size_t>(l)]) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("long truncated sums approach the dc value") {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const auto discrete = bilinear_transform(analog, 12600.0);
  const auto form = partial_fractions(discrete);
  const auto h = impulse_response(form, 2000);
  double sum = 0.0;
  for (double v : h.samples) sum += v;
  CHECK(std::abs(sum - discrete.evaluate_z({1.0, 0.0}).real()) < 1e-9);
}

TEST_CASE("unstable poles still produce the (diverging) response") {
  PoleResidueForm form;
  form.poles = {{2.0, 0.0}};
  form.residues = {{1.0, 0.0}};
  form.sample_rate_hz = 1.0;
  CHECK_FALSE(form.stable());
  const auto h = impulse_response(form, 4);
  CHECK(h.samples[3] == doctest::Approx(8.0));
}

TEST_CASE("accumulate-and-dump response is flat unity of length R") {
  const auto h3 = accumulate_and_dump_response(3);
  REQUIRE(h3.length() == 3);
  for (double v : h3.samples) CHECK(v == 1.0);
  const auto h1 = accumulate_and_dump_response(1);
  REQUIRE(h1.length() == 1);
  CHECK(h1.samples[0] == 1.0);
  CHECK_THROWS_AS(accumulate_and_dump_response(0), std::invalid_argument);
}

TEST_CASE("energy rule selects the shortest length capturing the fraction") {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const auto form = partial_fractions(bilinear_transform(analog, 12600.0));
  const int chosen = energy_rule_length(form, 1.0 - 1e-6, 4000);
  const auto h = impulse_response(form, 4000);
  double total = 0.0;
  for (double v : h.samples) total += v * v;
  double head = 0.0;
  for (int l = 0; l < chosen; ++l) {
    head += h.samples[static_cast<std::size_t>(l)] * h.samples[static_cast<std::size_t>(l)];
  }
  CHECK(head >= (1.0 - 1e-6) * total);
  double head_minus = head - h.samples[static_cast<std::size_t>(chosen - 1)] *
                                 h.samples[static_cast<std::size_t>(chosen - 1)];
  CHECK(head_minus < (1.0 - 1e-6) * total);
  CHECK(chosen < 108);
}
