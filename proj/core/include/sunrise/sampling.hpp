#pragma once

#include <cstdint>
#include <random>

#include "sunrise/interval_set.hpp"
#include "sunrise/rational.hpp"

namespace sunrise {

/// Seeded source of rational test data.  All randomness in the toolkit goes
/// through this wrapper so runs are reproducible from a single 64-bit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform integer in [lo, hi] inclusive.
  long integer(long lo, long hi);

  /// Dyadic rational lo + (hi-lo) * k / 2^grain_bits with k uniform.
  Rational rational(const Rational& lo, const Rational& hi, int grain_bits = 16);

  /// Union of up to max_components disjoint open intervals inside (lo, hi),
  /// each of length >= min_len and pairwise separated by >= min_len.
  IntervalSet interval_set(const Rational& lo, const Rational& hi, int max_components,
                           const Rational& min_len);

 private:
  std::mt19937_64 eng_;
};

}  // namespace sunrise
