#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "rdcalib/bpdn.hpp"
#include "rdcalib/calibrate.hpp"
#include "rdcalib/discretize.hpp"
#include "rdcalib/fourier.hpp"
#include "rdcalib/lc_ladder.hpp"
#include "rdcalib/random.hpp"
#include "rdcalib/rd_model.hpp"

namespace {

using namespace rdcalib;

RdSystem standard_system(int impulse_length) {
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const auto form = partial_fractions(bilinear_transform(analog, 12600.0));
  return make_rd_system(generate_chipping(12600, 7),
                        impulse_response(form, impulse_length), 12);
}

void BM_FilterSynthesisPipeline(benchmark::State& state) {
  const LcComponents components = synthesize_nominal(FilterApproximation::kButterworth);
  for (auto _ : state) {
    const auto form =
        partial_fractions(bilinear_transform(lc_transfer_function(components), 12600.0));
    benchmark::DoNotOptimize(impulse_response(form, 108));
  }
}
BENCHMARK(BM_FilterSynthesisPipeline)->Unit(benchmark::kMicrosecond);

void BM_ApplyPhi(benchmark::State& state) {
  const RdSystem system = standard_system(static_cast<int>(state.range(0)));
  Rng rng(3);
  Eigen::VectorXd x(system.grid_length);
  for (int i = 0; i < system.grid_length; ++i) x(i) = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_phi(system, x));
  }
}
BENCHMARK(BM_ApplyPhi)->Arg(108)->Arg(228)->Unit(benchmark::kMicrosecond);

void BM_ApplyPhiAdjoint(benchmark::State& state) {
  const RdSystem system = standard_system(static_cast<int>(state.range(0)));
  Rng rng(4);
  Eigen::VectorXd y(system.measurement_count);
  for (int i = 0; i < system.measurement_count; ++i) y(i) = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_phi_adjoint(system, y));
  }
}
BENCHMARK(BM_ApplyPhiAdjoint)->Arg(108)->Arg(228)->Unit(benchmark::kMicrosecond);

void BM_DictionarySynthesize(benchmark::State& state) {
  const FourierDictionary dictionary(12600);
  Rng rng(5);
  Eigen::VectorXcd alpha(12600);
  for (int i = 0; i < 12600; ++i) alpha(i) = {rng.normal(), rng.normal()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dictionary.synthesize(alpha));
  }
}
BENCHMARK(BM_DictionarySynthesize)->Unit(benchmark::kMicrosecond);

void BM_ProjectL1Ball(benchmark::State& state) {
  Rng rng(6);
  Eigen::VectorXcd v(12600);
  for (int i = 0; i < 12600; ++i) v(i) = {rng.normal(), rng.normal()};
  const double radius = 0.25 * v.cwiseAbs().sum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_l1_ball(v, radius));
  }
}
BENCHMARK(BM_ProjectL1Ball)->Unit(benchmark::kMicrosecond);

void BM_BuildDMatrix(benchmark::State& state) {
  const int m_q = static_cast<int>(state.range(0));
  Rng rng(8);
  Eigen::VectorXd demodulated(m_q * 12);
  for (int i = 0; i < demodulated.size(); ++i) demodulated(i) = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_d_matrix(demodulated, 12, 108, m_q));
  }
}
BENCHMARK(BM_BuildDMatrix)->Arg(189)->Arg(1050)->Unit(benchmark::kMicrosecond);

void BM_MbcCalibrate(benchmark::State& state) {
  const int m_q = static_cast<int>(state.range(0));
  const int n_q = m_q * 12;
  const auto analog =
      lc_transfer_function(synthesize_nominal(FilterApproximation::kButterworth));
  const auto form = partial_fractions(bilinear_transform(analog, 12600.0));
  const ImpulseResponse model = impulse_response(form, 108);
  const ImpulseResponse actual = impulse_response(form, std::min(n_q, 400));
  const ChippingSequence chipping = generate_chipping(n_q, 9);
  const RdSystem model_system = make_rd_system(chipping, model, 12);
  const RdSystem actual_system = make_rd_system(chipping, actual, 12);
  const MultitoneSignal x_q =
      generate_multitone(10, 11, 12600.0, n_q / 12600.0);
  const Eigen::VectorXd measured = apply_phi(actual_system, x_q.samples);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbc_calibrate({x_q, model_system, measured}));
  }
}
BENCHMARK(BM_MbcCalibrate)->Arg(189)->Arg(1050)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
