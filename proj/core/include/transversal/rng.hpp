#pragma once

#include <cstdint>
#include <random>

namespace transversal {

// Every random draw in the library goes through this wrapper. mt19937_64 is
// fully specified by the standard, and the bounded/real draws below avoid
// std::uniform_*_distribution, whose output is implementation-defined; with
// that, identical seeds give identical results on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). bound = 0 is invalid.
  std::uint64_t uniform_u64(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  std::size_t uniform_index(std::size_t bound) {
    return static_cast<std::size_t>(uniform_u64(static_cast<std::uint64_t>(bound)));
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

private:
  std::mt19937_64 engine_;
};

// Stable seed derivation used to chain per-iteration / per-retry / per-cell
// seeds from one master seed: two splitmix64 rounds over (base, a, b) with
// the golden-ratio constant 0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace transversal
