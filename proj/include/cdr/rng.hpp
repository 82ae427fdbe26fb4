#pragma once

#include <cstdint>
#include <random>

namespace cdr {

/// Seeded generator with a fixed derivation so instances reproduce in any
/// implementation: std::mt19937_64 (whose output sequence the standard pins
/// down) seeded with the seed value, and uniform reals taken as
/// (next() >> 11) * 2^-53. Library distributions are deliberately not used,
/// their algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p: uniform() < p.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound): floor(uniform() * bound).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cdr
