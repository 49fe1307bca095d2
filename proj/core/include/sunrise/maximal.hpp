#pragma once

#include <optional>
#include <vector>

#include "sunrise/interval_set.hpp"
#include "sunrise/rational.hpp"
#include "sunrise/step_weight.hpp"

namespace sunrise {

/// M+ 1_E(x) = sup_{h>0} |E ∩ (x,x+h)| / h, exact.  The sup is attained at a
/// component right endpoint (or as the h->0 limit inside E, where the value
/// is 1), so a finite candidate maximization is exact.  0 when E lies left
/// of x.  Throws DomainError for empty E.
Rational mplus_indicator_at(const IntervalSet& e, const Rational& x);

/// One component (a_j, b_j) of a rising-sun decomposition with its mass
/// certificate |E ∩ (a_j,b_j)|; the certificate equals alpha * (b_j - a_j)
/// exactly.
struct DecompositionComponent {
  Rational left;
  Rational right;
  Rational mass;
};

/// Exact decomposition of the superlevel set {M+ 1_E > alpha}.  Components
/// are disjoint and sorted; they may share endpoints (the underlying open
/// set can have touching components), which as_interval_set() merges.
struct Decomposition {
  Rational alpha;
  std::vector<DecompositionComponent> components;

  IntervalSet as_interval_set() const;
  Rational total_length() const;
};

/// Rising-sun decomposition of {x : M+ 1_E(x) > alpha}.
///
/// Contract: with F(x) = |E ∩ (-inf,x]| - alpha*x, the set equals
/// {x : exists y > x with F(y) > F(x)}; it is computed by a right-to-left
/// running-maximum sweep over the knots of F with exact rational
/// root-finding on the linear pieces.  Endpoints where the average equals
/// alpha are excluded (open-set convention).
///
/// Requires 0 < alpha < 1 and E nonempty; throws DomainError otherwise.
Decomposition superlevel_indicator(const IntervalSet& e, const Rational& alpha);

/// Halo extension H_lambda^+(E) = {M+ 1_E > lambda} as a canonical interval
/// set.  lambda >= 1 is rejected as degenerate input (M+ 1_E <= 1 makes the
/// set empty), as is lambda <= 0.
IntervalSet halo(const IntervalSet& e, const Rational& lambda);

/// The iterates H_alpha^{+,k}(E), k = 0..N; iterates[0] is the base set and
/// each iterate contains the previous one (nesting is certified during
/// construction).
struct HaloChain {
  IntervalSet base;
  Rational alpha;
  std::vector<IntervalSet> iterates;  // size k+1, iterates[0] == base
};

HaloChain halo_iterate(const IntervalSet& e, const Rational& alpha, int k);

/// Smallest N with alpha^N <= lambda, i.e. ceil(log(1/lambda)/log(1/alpha)),
/// computed by exact rational powering (no floating point).  Requires
/// 0 < lambda < alpha < 1.
int halo_iteration_bound(const Rational& lambda, const Rational& alpha);

/// M- w(x) = sup_{h>0} (1/h) * integral of w over (x-h, x), exact.  On each
/// constant piece the backward average is monotone in the left endpoint, so
/// the sup is attained at a breakpoint or in the h->0 limit (the left limit
/// of w at x); both candidate families are finite.
Rational mminus_weight_at(const StepWeight& w, const Rational& x);

/// The increasing sequence x_0 = a, x_1, ..., x_depth where each x_k halves
/// the E-mass of (x_{k-1}, b): |E ∩ (x_{k-1}, x_k]| = |E ∩ (x_k, b)|.  When
/// the mass median is attained along a gap of E the rightmost point is
/// returned.  The tail mass after depth d is |E ∩ (a,b)| * 2^-d.
/// Requires |E ∩ (a,b)| > 0.
std::vector<Rational> mass_halving_sequence(const IntervalSet& e, const Rational& a,
                                            const Rational& b, int depth);

/// Incremental maximizer of backward averages (W(x) - W(t)) / (x - t) over a
/// growing set of knots (t, W(t)).  Knots must be pushed in increasing t and
/// queries must come from the right of every pushed knot.  Maintains the
/// lower convex hull of the knots; each query is a tangent search, O(log n).
///
/// Used by the constants module to evaluate M- along many points without
/// rescanning all breakpoints.
class BackwardAverageMaximizer {
 public:
  void push(Rational t, Rational w);

  /// Max slope from (x, wx) back to a pushed knot; nullopt when no knot has
  /// t < x.
  std::optional<Rational> max_average(const Rational& x, const Rational& wx) const;

  std::size_t size() const { return pts_.size(); }

 private:
  struct Pt {
    Rational t, w;
  };
  std::vector<Pt> pts_;  // lower convex hull, t strictly increasing
};

}  // namespace sunrise
