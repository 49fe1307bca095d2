#pragma once

#include <span>
#include <vector>

#include "sunrise/interval_set.hpp"
#include "sunrise/rational.hpp"

namespace sunrise {

/// Cumulative mass function W(x) = integral of w over (-inf, x] of a step
/// weight: 0 left of the support, piecewise linear between the breakpoints,
/// constant right of the support.  Evaluation at any rational is exact.
class Antiderivative {
 public:
  Antiderivative(std::vector<Rational> breakpoints, std::vector<Rational> cumulative);

  std::span<const Rational> breakpoints() const { return breaks_; }
  std::span<const Rational> knot_values() const { return cum_; }

  Rational operator()(const Rational& x) const;
  const Rational& total() const { return cum_.back(); }

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> cum_;
};

/// Compactly supported piecewise-constant weight with rational breakpoints
/// and nonnegative rational values; implicitly zero outside the support
/// hull.  At least one value must be positive.  Immutable after
/// construction.
class StepWeight {
 public:
  StepWeight(std::vector<Rational> breakpoints, std::vector<Rational> values);

  std::size_t pieces() const { return values_.size(); }
  std::span<const Rational> breakpoints() const { return breaks_; }
  std::span<const Rational> values() const { return values_; }
  const Rational& support_left() const { return breaks_.front(); }
  const Rational& support_right() const { return breaks_.back(); }

  const Antiderivative& antiderivative() const { return cum_; }

  /// w(a,b) = integral of w over (a,b), exact.  Zero when a >= b.
  Rational mass(const Rational& a, const Rational& b) const;
  Rational mass(const IntervalSet& s) const;
  const Rational& total_mass() const { return cum_.total(); }

  /// One-sided limits of w; zero outside the support hull.
  Rational value_left_of(const Rational& x) const;
  Rational value_right_of(const Rational& x) const;

  /// Index of the piece whose half-open cell (b_i, b_{i+1}] contains x from
  /// the left; pieces() if x <= support_left or x > support_right.
  std::size_t piece_left_of(const Rational& x) const;

  /// w * indicator of (a,b).  Throws DomainError when a >= b or when the
  /// restriction carries no mass (empty support).
  StepWeight restrict(const Rational& a, const Rational& b) const;

  StepWeight translate(const Rational& t) const;
  StepWeight scale_values(const Rational& c) const;

  bool nondecreasing() const;

  friend bool operator==(const StepWeight& a, const StepWeight& b) {
    return a.breaks_ == b.breaks_ && a.values_ == b.values_;
  }

 private:
  std::vector<Rational> breaks_;  // n+1, strictly increasing
  std::vector<Rational> values_;  // n, >= 0, at least one > 0
  Antiderivative cum_;
};

}  // namespace sunrise
