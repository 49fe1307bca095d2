#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sunrise/constants.hpp"
#include "sunrise/interval_set.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/search.hpp"
#include "sunrise/step_weight.hpp"

namespace sunrise {

/// Candidate families for the C_w+(alpha) lower-bound search.  All families
/// generate sets inside the support hull of w: mass outside the support
/// contributes nothing to w(E) while only dragging the halo left, so the
/// restriction matches the compact-support model of the toolkit.
namespace family {
inline constexpr unsigned kAnchored = 1u;      // subintervals anchored at breakpoints
inline constexpr unsigned kRandomUnions = 2u;  // seeded unions of a few intervals
inline constexpr unsigned kCombs = 4u;         // n equal intervals with equal gaps
inline constexpr unsigned kAdapted = 8u;       // light cells with heavy cells to their left
inline constexpr unsigned kAll = 15u;
}  // namespace family

std::string family_names(unsigned families);
unsigned parse_families(const std::string& csv);

/// Lower bound for the sharp weighted tauberian constant C_w+(alpha),
/// carrying the maximizing set, the exact rational ratio at the witness and
/// the family that produced it.
struct TauberianEstimate {
  Rational alpha;
  double value = 1.0;
  Rational exact_value;   // w(H_alpha(E)) / w(E) at the witness, exact
  IntervalSet witness;
  std::string family;
  std::size_t candidates = 0;
  std::size_t skipped = 0;  // candidates with w(E) = 0
};

/// Max of w(H_alpha+(E)) / w(E) over the selected candidate families, with
/// exact halo computation per candidate.  Requires alpha in (0,1).
TauberianEstimate tauberian_lower(const StepWeight& w, const Rational& alpha,
                                  unsigned families, const SearchConfig& cfg);

/// Sampled Solyanik curve: per-alpha lower bounds, regularized to be
/// nonincreasing in alpha, plus the least-squares fit
/// log(value-1) = log K + delta * log(1-alpha) over the fit window.
/// delta/prefactor are absent when fewer than 4 points are usable (the
/// curve is flat at 1 within 1e-9): "delta unresolved".
struct SolyanikCurve {
  struct Point {
    Rational alpha;
    double value = 1.0;        // raw lower bound
    double regularized = 1.0;  // after monotone regularization
  };
  std::vector<Point> points;
  std::optional<double> delta;
  std::optional<double> prefactor;
  double window_lo = 0.9;
  double window_hi = 0.995;
  unsigned families = family::kAll;
  std::uint64_t seed = 0;

  bool resolved() const { return delta.has_value(); }
};

/// Defaults follow the guarantee window of the Solyanik estimate; both
/// bounds are configurable.
struct FitWindow {
  double lo = 0.9;
  double hi = 0.995;
};

SolyanikCurve solyanik_fit(const StepWeight& w, std::vector<Rational> alphas,
                           unsigned families, const SearchConfig& cfg,
                           FitWindow window = {});

/// One sample that exceeded the restricted weak type bound computed from
/// the *estimated* C0.  implied_c0 is the smallest constant that would make
/// the sample pass; since C0 is only a lower bound for the true constant,
/// such samples flag estimation gaps rather than falsity.
struct WeakTypeViolation {
  IntervalSet e;
  Rational lambda;
  double lhs = 0, rhs = 0, implied_c0 = 0;
};

struct WeakTypeReport {
  Rational alpha0;
  double c0 = 0;  // estimated C_w+(alpha0)
  double p = 0;   // log C0 / log(1/alpha0)
  int trials = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  double worst_slack = 0;  // min over samples of rhs/lhs
  std::vector<WeakTypeViolation> violations;  // estimation-gap flags
  /// Exact set-theoretic failures (halo monotonicity or the iteration
  /// lemma); any nonzero count indicates a bug, not an estimation gap.
  int hard_failures = 0;
};

/// Checks w(H_lambda+(E)) <= C0 * lambda^-p * w(E) with
/// p = log C0 / log(1/alpha0) on seeded random sets, and verifies the exact
/// halo monotonicity / iteration inclusions alongside.
WeakTypeReport restricted_weak_type_check(const StepWeight& w, const Rational& alpha0,
                                          std::span<const Rational> lambdas, int trials,
                                          std::uint64_t seed, unsigned families,
                                          const SearchConfig& cfg);

/// p* = exp(c * fw): w lies in Ap+ for all p > p*.  Requires fw >= 1, c > 0.
double embedding_threshold(double fw, double c);

struct HolderPair {
  Rational x, y;  // 0 < x <= y < 1
};

struct HolderReport {
  double fw = 1.0;
  struct PairEval {
    Rational x, y;
    Rational cx, cy;  // regularized curve estimates, exact ratios
  };
  std::vector<PairEval> pairs;
  double fitted_c = 0;
  double fitted_k = 0;
  bool resolved = false;

  /// |C(x)-C(y)| <= k * C(y) * ((y-x)/x)^exponent for every pair; the check
  /// is exact rational arithmetic when exponent == 1 and k is integral.
  bool passes_with_exponent(double k, double exponent) const;
};

/// Estimates the curve at all pair points, regularizes it, and reports the
/// (K, c) with minimal required K over a fixed c-ladder for the modulus
/// |C(x)-C(y)| <= K * C(y) * ((y-x)/x)^{1/(c*fw)}.
HolderReport holder_modulus_check(const StepWeight& w, std::span<const HolderPair> pairs,
                                  unsigned families, const SearchConfig& cfg);

}  // namespace sunrise
