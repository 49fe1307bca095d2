#include "sunrise/maximal.hpp"

#include <algorithm>

#include "sunrise/errors.hpp"

namespace sunrise {

Rational mplus_indicator_at(const IntervalSet& e, const Rational& x) {
  if (e.empty()) throw DomainError("M+ of an empty set");
  if (e.contains(x)) return Rational(1);
  Rational best(0);
  const Rational gx = e.cumulative(x);
  for (const auto& c : e.components()) {
    if (c.right <= x) continue;
    // candidate h = right endpoint - x
    const Rational avg = (e.cumulative(c.right) - gx) / (c.right - x);
    if (avg > best) best = avg;
  }
  return best;
}

IntervalSet Decomposition::as_interval_set() const {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.reserve(components.size());
  for (const auto& c : components) raw.emplace_back(c.left, c.right);
  return IntervalSet::normalize(std::move(raw));
}

Rational Decomposition::total_length() const {
  Rational len;
  for (const auto& c : components) len += c.right - c.left;
  return len;
}

Decomposition superlevel_indicator(const IntervalSet& e, const Rational& alpha) {
  if (e.empty()) throw DomainError("superlevel set of an empty set");
  if (!(Rational(0) < alpha && alpha < Rational(1)))
    throw DomainError("alpha must lie in (0,1), got " + alpha.str());

  // knots: all component endpoints of E, ascending; between consecutive
  // knots F(x) = |E ∩ (-inf,x]| - alpha*x is linear with slope 1 - alpha
  // inside E and -alpha outside.
  const auto comps = e.components();
  const std::size_t m = 2 * comps.size();
  std::vector<Rational> knot(m), fval(m);
  {
    Rational cum(0);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      knot[2 * i] = comps[i].left;
      fval[2 * i] = cum - alpha * comps[i].left;
      cum += comps[i].length();
      knot[2 * i + 1] = comps[i].right;
      fval[2 * i + 1] = cum - alpha * comps[i].right;
    }
  }

  // sup of F over [knot[i], +inf): F decreases right of the last knot, and
  // on each segment the max sits at an endpoint, so a backward running max
  // over knot values suffices.
  std::vector<Rational> sup(m);
  sup[m - 1] = fval[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) sup[i] = max(fval[i], sup[i + 1]);

  // Sweep segments right to left.  U ∩ segment is always an (possibly
  // empty, possibly full) open suffix of the segment, so components can be
  // stitched leftwards.
  std::vector<DecompositionComponent> rev;
  std::optional<Interval> pending;
  auto emit = [&](Interval iv) {
    rev.push_back(DecompositionComponent{iv.left, iv.right, Rational(0)});
  };

  for (std::size_t i = m - 1; i-- > 0;) {
    const bool inside_e = (i % 2 == 0);  // segment (knot[2j], knot[2j+1]) is a component of E
    const Rational& sr = sup[i + 1];     // sup of F over [knot[i+1], +inf)
    const bool knot_right_in_u = sr > fval[i + 1];

    std::optional<Interval> piece;
    bool complete = false;  // piece's left endpoint is an interior crossing
    if (inside_e) {
      piece = Interval{knot[i], knot[i + 1]};  // slope 1-alpha > 0: fully inside U
    } else if (sr > fval[i + 1]) {
      if (sr >= fval[i]) {
        piece = Interval{knot[i], knot[i + 1]};
      } else {
        // crossing x* with F(x*) = sr on a segment of slope -alpha
        Rational xstar = knot[i] + (fval[i] - sr) / alpha;
        piece = Interval{std::move(xstar), knot[i + 1]};
        complete = true;
      }
    }

    if (!piece) {
      if (pending) { emit(*pending); pending.reset(); }
      continue;
    }
    if (pending && pending->left == knot[i + 1] && knot_right_in_u) {
      pending->left = piece->left;
    } else {
      if (pending) emit(*pending);
      pending = *piece;
    }
    if (complete) { emit(*pending); pending.reset(); }
  }

  // left tail: slope -alpha on (-inf, knot[0]], F grows without bound going
  // left, so U stops at the crossing F(x*) = sup F.
  if (sup[0] > fval[0]) {
    Rational xstar = knot[0] - (sup[0] - fval[0]) / alpha;
    if (pending && pending->left == knot[0]) {
      pending->left = std::move(xstar);
    } else {
      if (pending) { emit(*pending); pending.reset(); }
      pending = Interval{std::move(xstar), knot[0]};
    }
  }
  if (pending) emit(*pending);

  Decomposition out;
  out.alpha = alpha;
  out.components.assign(rev.rbegin(), rev.rend());
  for (auto& c : out.components) {
    c.mass = e.cumulative(c.right) - e.cumulative(c.left);
  }
  return out;
}

IntervalSet halo(const IntervalSet& e, const Rational& lambda) {
  if (lambda >= Rational(1))
    throw DomainError("degenerate halo level: M+ 1_E <= 1 so {M+ 1_E > " + lambda.str() +
                      "} is empty");
  return superlevel_indicator(e, lambda).as_interval_set();
}

HaloChain halo_iterate(const IntervalSet& e, const Rational& alpha, int k) {
  if (k < 1) throw DomainError("halo iteration count must be positive");
  HaloChain chain;
  chain.base = e;
  chain.alpha = alpha;
  chain.iterates.reserve(static_cast<std::size_t>(k) + 1);
  chain.iterates.push_back(e);
  for (int i = 0; i < k; ++i) {
    IntervalSet next = halo(chain.iterates.back(), alpha);
    if (!chain.iterates.back().subset_of(next))
      throw std::logic_error("halo iterate failed to contain its predecessor");
    chain.iterates.push_back(std::move(next));
  }
  return chain;
}

int halo_iteration_bound(const Rational& lambda, const Rational& alpha) {
  if (!(Rational(0) < lambda && lambda < alpha && alpha < Rational(1)))
    throw DomainError("halo_iteration_bound requires 0 < lambda < alpha < 1");
  int n = 1;
  Rational p = alpha;
  while (p > lambda) {
    p *= alpha;
    ++n;
  }
  return n;
}

Rational mminus_weight_at(const StepWeight& w, const Rational& x) {
  Rational best = w.value_left_of(x);  // h -> 0 limit
  const auto breaks = w.breakpoints();
  const auto& cum = w.antiderivative();
  const Rational wx = cum(x);
  for (const auto& t : breaks) {
    if (!(t < x)) break;
    const Rational avg = (wx - cum(t)) / (x - t);
    if (avg > best) best = avg;
  }
  return best;
}

std::vector<Rational> mass_halving_sequence(const IntervalSet& e, const Rational& a,
                                            const Rational& b, int depth) {
  if (!(a < b)) throw DomainError("mass_halving_sequence requires a < b");
  if (depth < 1) throw DomainError("mass_halving_sequence depth must be positive");
  const IntervalSet inner = e.intersect(a, b);
  if (inner.empty()) throw DomainError("no E-mass inside (a,b)");

  const Rational total = inner.measure();
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(depth) + 1);
  xs.push_back(a);
  Rational level(0);  // |E ∩ (a, x_k]|
  for (int k = 0; k < depth; ++k) {
    // target cumulative mass: halfway between the current level and total
    const Rational target = level + (total - level) / Rational(2);
    // rightmost x with |E ∩ (a,x]| = target: locate the first component
    // whose closing cumulative exceeds the target
    Rational cum(0);
    Rational x;
    bool found = false;
    for (const auto& c : inner.components()) {
      const Rational cum_end = cum + c.length();
      if (cum_end > target) {
        x = (cum >= target) ? c.left : c.left + (target - cum);
        found = true;
        break;
      }
      cum = cum_end;
    }
    if (!found) throw std::logic_error("mass median inversion ran past the set");
    xs.push_back(x);
    level = target;
  }
  return xs;
}

void BackwardAverageMaximizer::push(Rational t, Rational w) {
  Pt p{std::move(t), std::move(w)};
  if (!pts_.empty() && !(pts_.back().t < p.t))
    throw DomainError("hull knots must be pushed with strictly increasing t");
  // keep strictly convex lower hull: slopes between consecutive points
  // strictly increasing
  while (pts_.size() >= 2) {
    const Pt& a = pts_[pts_.size() - 2];
    const Pt& b = pts_.back();
    // slope(a,b) >= slope(b,p)  <=>  cross(a,b,p) <= 0
    const Rational cross =
        (b.t - a.t) * (p.w - a.w) - (b.w - a.w) * (p.t - a.t);
    if (cross.sign() <= 0) pts_.pop_back(); else break;
  }
  pts_.push_back(std::move(p));
}

std::optional<Rational> BackwardAverageMaximizer::max_average(const Rational& x,
                                                              const Rational& wx) const {
  if (pts_.empty()) return std::nullopt;
  if (!(pts_.back().t < x)) throw DomainError("query point must lie right of all knots");
  auto slope = [&](std::size_t i) { return (wx - pts_[i].w) / (x - pts_[i].t); };
  // slope to hull vertices is unimodal; binary search for the peak
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    // compare slope(mid) against slope(mid+1) without divisions
    const Pt& p = pts_[mid];
    const Pt& q = pts_[mid + 1];
    const Rational lhs = (wx - p.w) * (x - q.t);
    const Rational rhs = (wx - q.w) * (x - p.t);
    if (lhs < rhs) lo = mid + 1; else hi = mid;
  }
  return slope(lo);
}

}  // namespace sunrise
