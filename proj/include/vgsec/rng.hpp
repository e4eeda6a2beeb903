#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace vgsec {

using Seed = std::uint64_t;

/// One step of the SplitMix64 generator; advances `state`.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// The `index`-th (0-based) output of a SplitMix64 stream started at `base`.
/// Used to give every ensemble run / experiment cell its own seed.
constexpr Seed derive_seed(Seed base, std::uint64_t index) noexcept {
  std::uint64_t state = base + index * 0x9E3779B97F4A7C15ULL;
  return splitmix64(state);
}

/// Seeded 64-bit Mersenne Twister with the few draws the project needs.
/// Draws are written out by hand so the stream does not depend on the
/// standard library's distribution implementations.
class Rng {
public:
  explicit Rng(Seed seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double uniform_open0() noexcept {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Exponential waiting time; +inf for a zero rate.
  double exponential(double rate) noexcept {
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log(uniform_open0()) / rate;
  }

  /// Unbiased integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace vgsec
