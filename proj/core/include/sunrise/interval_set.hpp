#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "sunrise/rational.hpp"

namespace sunrise {

/// Open interval with rational endpoints, left < right.
struct Interval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of disjoint open intervals.  Intervals are sorted,
/// pairwise disjoint, and never share an endpoint: sets are identified up to
/// null sets, so touching intervals are merged on construction.
///
/// Values are immutable after construction and safe to share across threads.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonicalizes a raw list of open intervals (merging overlaps and
  /// touching neighbours).  Throws DomainError if some pair has left >= right.
  static IntervalSet normalize(std::vector<std::pair<Rational, Rational>> raw);

  static IntervalSet single(Rational left, Rational right);

  bool empty() const { return comps_.empty(); }
  std::size_t size() const { return comps_.size(); }
  std::span<const Interval> components() const { return comps_; }
  const Interval& component(std::size_t i) const { return comps_[i]; }

  /// Support hull endpoints; throw DomainError when empty.
  const Rational& hull_left() const;
  const Rational& hull_right() const;

  /// Lebesgue measure, exact.
  Rational measure() const;

  /// |S ∩ (-inf, x]|, exact.  The cumulative mass function of the indicator.
  Rational cumulative(const Rational& x) const;

  /// |S ∩ (a,b)|, exact.
  Rational intersection_measure(const Rational& a, const Rational& b) const;

  /// Open-set membership.
  bool contains(const Rational& x) const;

  IntervalSet intersect(const Rational& a, const Rational& b) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  /// this minus other, up to null sets.
  IntervalSet difference(const IntervalSet& other) const;
  /// (a,b) minus this, up to null sets.
  IntervalSet complement_within(const Rational& a, const Rational& b) const;

  /// Inclusion up to null sets: |this \ other| = 0.
  bool subset_of(const IntervalSet& other) const;

  IntervalSet translate(const Rational& t) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  /// Lexicographic order on the component list; used for deterministic
  /// tie-breaking of search witnesses.
  friend std::strong_ordering operator<=>(const IntervalSet& a, const IntervalSet& b);

 private:
  std::vector<Interval> comps_;
};

}  // namespace sunrise
