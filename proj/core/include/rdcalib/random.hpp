#pragma once

#include <cstdint>
#include <random>

namespace rdcalib {

// Derives an independent substream seed from a master seed. Built on
// splitmix64 so (master, stream, index) triples map to well-separated states.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0);

// Deterministic random source. The engine is a standard-specified mt19937_64;
// the variate mappings are implemented here (not via std distributions, whose
// algorithms are implementation-defined) so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  // Gaussian via Box-Muller; the spare variate is cached.
  double normal(double mean = 0.0, double stddev = 1.0);

  // Uniform integer on [lo, hi], inclusive, unbiased (rejection).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Fair -1 / +1.
  double rademacher();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rdcalib
