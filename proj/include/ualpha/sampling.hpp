#pragma once

#include <cstdint>
#include <random>

#include "ualpha/algebra.hpp"
#include "ualpha/nilpotent.hpp"

namespace ualpha {

struct ShellPoint {
  Rational energy;
  dirac::Momentum momentum;
  Rational mass;
};

/// Seeded source of exact rational test data. Draws are taken straight from
/// the engine (no std distributions) so sequences match across toolchains.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// num/den with num in [-range, range], den in [1, max_den].
  Rational rational(std::int64_t range = 9, std::int64_t max_den = 4);
  /// Random element over the level's masks with up to `terms` terms.
  AlgebraElement element(int level, int terms = 4);

  /// E^2 = p^2 + m^2 with E, m > 0 and p != 0, from
  /// (a^2+b^2+c^2+d^2)^2 = (a^2+b^2+c^2-d^2)^2 + (2ad)^2 + (2bd)^2 + (2cd)^2.
  ShellPoint on_shell();
  /// E, m >= 0 with E^2 != p^2 + m^2.
  ShellPoint off_shell();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ualpha
