#include "sunrise/step_weight.hpp"

#include <algorithm>

#include "sunrise/errors.hpp"

namespace sunrise {

namespace {

// Validates the step-weight invariants and builds the cumulative knots.
std::vector<Rational> cumulative_masses(const std::vector<Rational>& breaks,
                                        const std::vector<Rational>& values) {
  if (breaks.size() < 2 || values.size() + 1 != breaks.size())
    throw DomainError("step weight needs n+1 breakpoints and n values");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1]))
      throw DomainError("step weight breakpoints must be strictly increasing");
  bool positive = false;
  for (const auto& v : values) {
    if (v.sign() < 0) throw DomainError("step weight values must be nonnegative");
    if (v.sign() > 0) positive = true;
  }
  if (!positive) throw DomainError("step weight must have positive mass (empty support)");

  std::vector<Rational> cum;
  cum.reserve(breaks.size());
  cum.emplace_back(0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    cum.push_back(cum.back() + values[i] * (breaks[i + 1] - breaks[i]));
  }
  return cum;
}

}  // namespace

Antiderivative::Antiderivative(std::vector<Rational> breakpoints, std::vector<Rational> cumulative)
    : breaks_(std::move(breakpoints)), cum_(std::move(cumulative)) {
  if (breaks_.size() < 2 || breaks_.size() != cum_.size())
    throw DomainError("antiderivative needs matching breakpoint/value knots");
  if (cum_.front().sign() != 0) throw DomainError("antiderivative must start at 0");
  for (std::size_t i = 0; i + 1 < cum_.size(); ++i)
    if (cum_[i + 1] < cum_[i]) throw DomainError("antiderivative must be nondecreasing");
}

Rational Antiderivative::operator()(const Rational& x) const {
  if (x <= breaks_.front()) return Rational(0);
  if (x >= breaks_.back()) return cum_.back();
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  // linear interpolation on cell i, exact
  const Rational len = breaks_[i + 1] - breaks_[i];
  return cum_[i] + (cum_[i + 1] - cum_[i]) * (x - breaks_[i]) / len;
}

StepWeight::StepWeight(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breaks_(std::move(breakpoints)),
      values_(std::move(values)),
      cum_(breaks_, cumulative_masses(breaks_, values_)) {}

Rational StepWeight::mass(const Rational& a, const Rational& b) const {
  if (!(a < b)) return Rational(0);
  return cum_(b) - cum_(a);
}

Rational StepWeight::mass(const IntervalSet& s) const {
  Rational m;
  for (const auto& c : s.components()) m += mass(c.left, c.right);
  return m;
}

std::size_t StepWeight::piece_left_of(const Rational& x) const {
  if (x <= breaks_.front() || x > breaks_.back()) return pieces();
  // first breakpoint >= x; x lies in the half-open cell ending there
  const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rational StepWeight::value_left_of(const Rational& x) const {
  const std::size_t i = piece_left_of(x);
  return i == pieces() ? Rational(0) : values_[i];
}

Rational StepWeight::value_right_of(const Rational& x) const {
  if (x < breaks_.front() || x >= breaks_.back()) return Rational(0);
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

StepWeight StepWeight::restrict(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw DomainError("restrict requires a < b");
  if (mass(a, b).sign() == 0)
    throw DomainError("restriction carries no mass (empty support)");
  std::vector<Rational> nb, nv;
  for (std::size_t i = 0; i < pieces(); ++i) {
    const Rational lo = max(breaks_[i], a);
    const Rational hi = min(breaks_[i + 1], b);
    if (!(lo < hi)) continue;
    if (nb.empty()) nb.push_back(lo);
    nb.push_back(hi);
    nv.push_back(values_[i]);
  }
  return StepWeight(std::move(nb), std::move(nv));
}

StepWeight StepWeight::translate(const Rational& t) const {
  std::vector<Rational> nb;
  nb.reserve(breaks_.size());
  for (const auto& x : breaks_) nb.push_back(x + t);
  return StepWeight(std::move(nb), values_);
}

StepWeight StepWeight::scale_values(const Rational& c) const {
  if (c.sign() <= 0) throw DomainError("scale factor must be positive");
  std::vector<Rational> nv;
  nv.reserve(values_.size());
  for (const auto& v : values_) nv.push_back(v * c);
  return StepWeight(breaks_, std::move(nv));
}

bool StepWeight::nondecreasing() const {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i + 1] < values_[i]) return false;
  return true;
}

}  // namespace sunrise
