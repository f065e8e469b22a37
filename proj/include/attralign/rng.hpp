#pragma once

#include <cstdint>
#include <random>

namespace attralign {

/// std::mt19937_64 with the few draws the model needs. Every trial owns one
/// engine seeded by `stream_seed(master, trial)`, so trials can run in any
/// order and on any thread.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial stream seed: the master seed XOR the global trial index.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t trial_index) {
  return master ^ trial_index;
}

}  // namespace attralign
