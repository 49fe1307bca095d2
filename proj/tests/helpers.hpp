#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sunrise/interval_set.hpp"
#include "sunrise/rational.hpp"
#include "sunrise/step_weight.hpp"

namespace testutil {

using sunrise::IntervalSet;
using sunrise::Rational;
using sunrise::StepWeight;

inline Rational R(long n) { return Rational(n); }
inline Rational R(long n, long d) { return Rational(n, d); }

inline IntervalSet set(std::vector<std::pair<long, long>> pairs) {
  std::vector<std::pair<Rational, Rational>> raw;
  for (auto& [a, b] : pairs) raw.emplace_back(R(a), R(b));
  return IntervalSet::normalize(std::move(raw));
}

/// Independent union length: coverage-count event sweep over the raw,
/// un-normalized pairs.  Used as the oracle for IntervalSet::measure.
inline Rational sweep_union_length(const std::vector<std::pair<Rational, Rational>>& raw) {
  std::vector<std::pair<Rational, int>> events;
  for (const auto& [l, r] : raw) {
    events.emplace_back(l, +1);
    events.emplace_back(r, -1);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  Rational total(0);
  int depth = 0;
  Rational open;
  for (const auto& [x, d] : events) {
    if (depth == 0 && d > 0) open = x;
    depth += d;
    if (depth == 0 && d < 0) total += x - open;
  }
  return total;
}

/// Direct piece-by-piece mass of w over (a,b); the oracle for the
/// antiderivative evaluation path.
inline Rational direct_mass(const StepWeight& w, const Rational& a, const Rational& b) {
  Rational m(0);
  const auto breaks = w.breakpoints();
  for (std::size_t i = 0; i < w.pieces(); ++i) {
    const Rational lo = sunrise::max(breaks[i], a);
    const Rational hi = sunrise::min(breaks[i + 1], b);
    if (lo < hi) m += w.values()[i] * (hi - lo);
  }
  return m;
}

}  // namespace testutil
