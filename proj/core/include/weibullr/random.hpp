#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace weibullr {

/// Seeded, single-owner stream of variates.
///
/// The stream is defined bit-for-bit by (seed, algorithm): uniforms are the top
/// 53 bits of std::mt19937_64 scaled by 2^-53, so output does not depend on the
/// standard library's distribution implementations.
class RandomSource {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/u53";

  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::string_view algorithm() const noexcept { return kAlgorithm; }

  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard exponential, -log(1 - U).
  double exponential();

  /// Standard normal via the polar Box-Muller method.
  double normal();

  /// Gamma(shape, 1) for integer shape >= 1, as a sum of exponentials.
  double gamma_integer(int shape);

  /// A child stream seeded from this one.
  RandomSource split() { return RandomSource(engine_()); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace weibullr
