#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sunrise/rational.hpp"

namespace sunrise {

/// Budget knobs shared by every estimator.  Estimates are reproducible
/// bit-for-bit for a fixed config, and candidate pools are nested as
/// base_candidates grows so that a larger budget never loses a candidate a
/// smaller one evaluated.
struct SearchConfig {
  int base_candidates = 24;   // candidate values per coordinate axis
  int refine_rounds = 8;      // bracket-shrinking refinement rounds
  int ascent_cycles = 3;      // coordinate sweeps per refinement round
  std::uint64_t seed = 0x5EED5EEDULL;
  double quad_tol = 1e-6;     // relative tolerance of inner quadratures

  void validate() const;
};

/// Indices 0..n-1 in binary-subdivision order: both ends first, then the
/// midpoint, then midpoints of the halves, and so on.  Any prefix of the
/// order is a well-spread subset and prefixes are nested, which keeps
/// candidate pools monotone in the budget.
std::vector<std::size_t> subdivision_order(std::size_t n);

/// The first `count` values of `sorted_values` in subdivision order,
/// returned sorted.  count <= 0 yields the full set.
std::vector<Rational> axis_pool(std::span<const Rational> sorted_values, int count);

/// Evenly spaced rational grid of `count` points on [lo, hi] (inclusive).
std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, int count);

/// Worker count for candidate evaluation: SUNRISE_THREADS if set, otherwise
/// hardware concurrency, capped at 8.  Never less than 1.
unsigned worker_threads();

/// Runs run_range(begin, end) over a fixed chunking of [0, n) using
/// worker_threads() threads.  The chunk layout depends only on n, so callers
/// that fold per-chunk results in index order stay deterministic regardless
/// of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& run_range);

}  // namespace sunrise
