#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sunrise/interval_set.hpp"
#include "sunrise/rational.hpp"
#include "sunrise/step_weight.hpp"
#include "sunrise/tauberian.hpp"

namespace sunrise {

/// Grid used by the brute-force oracle.  The window must cover every point
/// any halo of the instance can reach; covering() picks the documented
/// margin |hull| / min(alpha, 1-alpha).
struct GridSpec {
  Rational step;
  Rational window_left;
  Rational window_right;

  static GridSpec covering(const IntervalSet& e, const Rational& alpha, const Rational& step);
};

/// Brute-force lower bound for M+ 1_E(x): max of |E ∩ (x,x+h)|/h over
/// h in {step, 2 step, ...} within the window plus the offsets to component
/// right endpoints.  Exact (equal to M+) for indicator data because the sup
/// is attained at a right endpoint.  Throws DomainError when x or E leave
/// the window.
Rational grid_mplus(const IntervalSet& e, const Rational& x, const GridSpec& g);

/// Marks grid points with grid_mplus > alpha and returns the union of
/// step-width cells centered at marked points.
IntervalSet grid_superlevel(const IntervalSet& e, const Rational& alpha, const GridSpec& g);

/// Hausdorff distance between the closures, exact.  Throws DomainError when
/// exactly one side is empty; 0 when both are.
Rational hausdorff_distance(const IntervalSet& a, const IntervalSet& b);

struct SampleBudget {
  int samples = 10000;
  std::uint64_t seed = 1;
};

struct InequalityWitness {
  Rational a, b, c;
  IntervalSet e;  // empty for triple-only inequalities
};

/// Outcome of a sampled inequality check.  pass() follows the spec
/// convention worst lhs/rhs <= 1 + 1e-9.  `flagged` counts samples that
/// exceeded an estimate-based bound (possible only for checks that use
/// estimated constants; see solyanik_converse_check).
struct InequalityReport {
  std::string tag;
  int checked = 0;
  int skipped = 0;
  int flagged = 0;
  double worst_ratio = 0.0;
  std::optional<InequalityWitness> worst;

  bool pass() const { return worst_ratio <= 1.0 + 1e-9; }
};

/// One-sided reverse Holder check at exponent 1+eps:
///   |(b,c)|^eps * integral over (a,b) of w^{1+eps} <= 2 (w(a,c))^{1+eps}
/// over seeded triples a < b < c with log-spread aspect ratios.  Triples
/// with w(a,c) = 0 are skipped and counted.
InequalityReport reverse_holder_check(const StepWeight& w, double eps, const SampleBudget& b);

/// Measure-ratio check  w(E)/w(a,c) <= 2 (|E|/|(b,c)|)^exponent  over
/// seeded triples and measurable E inside (a,b).
InequalityReport measure_ratio_check(const StepWeight& w, double exponent,
                                     const SampleBudget& b);

/// Per-sample instantiation of the converse Solyanik chain: for E inside
/// (a,b) with rho = |E|/|(b,c)| < exp(-beta), the set E' = (a,c) \ E
/// satisfies (a,c) ⊆ H_gamma(E') for every gamma < 1 - rho, whence
///   w(E) <= (w(H_gamma(E')) / w(E') - 1) * w(a,c)
/// exactly.  worst_ratio reports that exact chain; flagged counts samples
/// where the *estimated* curve bound 1 + K rho^delta fails (an estimation
/// gap, since the curve is a lower bound).
InequalityReport solyanik_converse_check(const StepWeight& w, double beta,
                                         const SolyanikCurve& curve, const SampleBudget& b);

}  // namespace sunrise
