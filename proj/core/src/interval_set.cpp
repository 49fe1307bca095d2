#include "sunrise/interval_set.hpp"

#include <algorithm>

#include "sunrise/errors.hpp"

namespace sunrise {

IntervalSet IntervalSet::normalize(std::vector<std::pair<Rational, Rational>> raw) {
  for (const auto& [l, r] : raw) {
    if (!(l < r)) {
      throw DomainError("interval with left >= right: (" + l.str() + "," + r.str() + ")");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  IntervalSet out;
  for (auto& [l, r] : raw) {
    if (!out.comps_.empty() && l <= out.comps_.back().right) {
      if (r > out.comps_.back().right) out.comps_.back().right = std::move(r);
    } else {
      out.comps_.push_back(Interval{std::move(l), std::move(r)});
    }
  }
  return out;
}

IntervalSet IntervalSet::single(Rational left, Rational right) {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.emplace_back(std::move(left), std::move(right));
  return normalize(std::move(raw));
}

const Rational& IntervalSet::hull_left() const {
  if (empty()) throw DomainError("hull of empty interval set");
  return comps_.front().left;
}

const Rational& IntervalSet::hull_right() const {
  if (empty()) throw DomainError("hull of empty interval set");
  return comps_.back().right;
}

Rational IntervalSet::measure() const {
  Rational m;
  for (const auto& c : comps_) m += c.length();
  return m;
}

Rational IntervalSet::cumulative(const Rational& x) const {
  Rational m;
  for (const auto& c : comps_) {
    if (c.right <= x) {
      m += c.length();
    } else if (c.left < x) {
      m += x - c.left;
      break;
    } else {
      break;
    }
  }
  return m;
}

Rational IntervalSet::intersection_measure(const Rational& a, const Rational& b) const {
  if (!(a < b)) return Rational(0);
  Rational m;
  for (const auto& c : comps_) {
    if (c.right <= a) continue;
    if (c.left >= b) break;
    m += min(c.right, b) - max(c.left, a);
  }
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const auto& c : comps_) {
    if (c.left < x && x < c.right) return true;
    if (c.left >= x) break;
  }
  return false;
}

IntervalSet IntervalSet::intersect(const Rational& a, const Rational& b) const {
  std::vector<std::pair<Rational, Rational>> raw;
  if (a < b) {
    for (const auto& c : comps_) {
      if (c.right <= a) continue;
      if (c.left >= b) break;
      raw.emplace_back(max(c.left, a), min(c.right, b));
    }
  }
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<std::pair<Rational, Rational>> raw;
  std::size_t i = 0, j = 0;
  while (i < comps_.size() && j < other.comps_.size()) {
    const auto& a = comps_[i];
    const auto& b = other.comps_[j];
    const Rational lo = max(a.left, b.left);
    const Rational hi = min(a.right, b.right);
    if (lo < hi) raw.emplace_back(lo, hi);
    if (a.right <= b.right) ++i; else ++j;
  }
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.reserve(comps_.size() + other.comps_.size());
  for (const auto& c : comps_) raw.emplace_back(c.left, c.right);
  for (const auto& c : other.comps_) raw.emplace_back(c.left, c.right);
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::difference(const IntervalSet& other) const {
  std::vector<std::pair<Rational, Rational>> raw;
  for (const auto& c : comps_) {
    Rational cursor = c.left;
    for (const auto& o : other.comps_) {
      if (o.right <= cursor) continue;
      if (o.left >= c.right) break;
      if (o.left > cursor) raw.emplace_back(cursor, o.left);
      cursor = max(cursor, o.right);
      if (cursor >= c.right) break;
    }
    if (cursor < c.right) raw.emplace_back(cursor, c.right);
  }
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::complement_within(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw DomainError("complement_within requires a < b");
  return IntervalSet::single(a, b).difference(*this);
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return difference(other).measure().sign() == 0;
}

IntervalSet IntervalSet::translate(const Rational& t) const {
  IntervalSet out;
  out.comps_.reserve(comps_.size());
  for (const auto& c : comps_) out.comps_.push_back(Interval{c.left + t, c.right + t});
  return out;
}

std::strong_ordering operator<=>(const IntervalSet& a, const IntervalSet& b) {
  const std::size_t n = std::min(a.comps_.size(), b.comps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.comps_[i].left <=> b.comps_[i].left; c != 0) return c;
    if (auto c = a.comps_[i].right <=> b.comps_[i].right; c != 0) return c;
  }
  return a.comps_.size() <=> b.comps_.size();
}

}  // namespace sunrise
