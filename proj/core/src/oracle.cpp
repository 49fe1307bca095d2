#include "sunrise/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sunrise/errors.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/sampling.hpp"

namespace sunrise {

GridSpec GridSpec::covering(const IntervalSet& e, const Rational& alpha, const Rational& step) {
  if (e.empty()) throw DomainError("grid over an empty set");
  if (step.sign() <= 0) throw DomainError("grid step must be positive");
  if (!(Rational(0) < alpha && alpha < Rational(1)))
    throw DomainError("alpha must lie in (0,1)");
  const Rational span = e.hull_right() - e.hull_left();
  const Rational margin = span / min(alpha, Rational(1) - alpha);
  GridSpec g;
  g.step = step;
  g.window_left = e.hull_left() - margin - step;
  g.window_right = e.hull_right() + step;
  return g;
}

namespace {

void check_window(const IntervalSet& e, const GridSpec& g) {
  if (g.step.sign() <= 0) throw DomainError("grid step must be positive");
  if (e.empty()) throw DomainError("grid over an empty set");
  if (e.hull_left() < g.window_left || e.hull_right() > g.window_right)
    throw DomainError("grid window does not cover the set");
}

}  // namespace

Rational grid_mplus(const IntervalSet& e, const Rational& x, const GridSpec& g) {
  check_window(e, g);
  if (x < g.window_left || x > g.window_right)
    throw DomainError("grid query point outside the window");
  Rational best(0);
  const Rational gx = e.cumulative(x);
  auto consider_h = [&](const Rational& h) {
    if (h.sign() <= 0) return;
    const Rational avg = (e.cumulative(x + h) - gx) / h;
    if (avg > best) best = avg;
  };
  for (Rational h = g.step; x + h <= g.window_right; h += g.step) consider_h(h);
  for (const auto& c : e.components()) consider_h(c.right - x);
  return best;
}

IntervalSet grid_superlevel(const IntervalSet& e, const Rational& alpha, const GridSpec& g) {
  check_window(e, g);
  if (!(Rational(0) < alpha && alpha < Rational(1)))
    throw DomainError("alpha must lie in (0,1)");

  // Marked <=> grid_mplus(x_k) > alpha <=> some candidate y > x_k (a later
  // grid point or a component right endpoint) has F(y) > F(x_k), where
  // F(x) = |E ∩ (-inf,x]| - alpha x.  One descending sweep with a running
  // max settles every grid point.
  const Rational& step = g.step;
  long m = 0;
  {
    Rational count = (g.window_right - g.window_left) / step;
    m = static_cast<long>(count.to_double());
    while (g.window_left + step * Rational(m) < g.window_right) ++m;
  }
  auto fval = [&](const Rational& x) { return e.cumulative(x) - alpha * x; };

  std::vector<std::pair<Rational, Rational>> cells;
  // endpoints sorted descending, merged into the sweep
  std::vector<Rational> ends;
  ends.reserve(e.size());
  for (const auto& c : e.components()) ends.push_back(c.right);
  std::sort(ends.rbegin(), ends.rend());
  std::size_t ei = 0;

  bool has_runmax = false;
  Rational runmax;
  auto absorb = [&](const Rational& f) {
    if (!has_runmax || f > runmax) {
      runmax = f;
      has_runmax = true;
    }
  };

  const Rational half = step / Rational(2);
  for (long k = m; k >= 0; --k) {
    const Rational x = g.window_left + step * Rational(k);
    while (ei < ends.size() && ends[ei] > x) absorb(fval(ends[ei++]));
    const Rational fx = fval(x);
    if (has_runmax && runmax > fx) cells.emplace_back(x - half, x + half);
    absorb(fx);
  }
  return IntervalSet::normalize(std::move(cells));
}

Rational hausdorff_distance(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() && b.empty()) return Rational(0);
  if (a.empty() || b.empty())
    throw DomainError("hausdorff distance against an empty set is undefined");

  // distance from a point to the closure of s
  auto dist = [](const IntervalSet& s, const Rational& x) {
    Rational best(-1);
    for (const auto& c : s.components()) {
      Rational d;
      if (x < c.left) d = c.left - x;
      else if (x > c.right) d = x - c.right;
      else d = Rational(0);
      if (best.sign() < 0 || d < best) best = d;
    }
    return best;
  };
  // sup over the closure of `from` of dist(to, .): attained at component
  // endpoints of `from` or at gap midpoints of `to` lying inside `from`
  auto one_sided = [&](const IntervalSet& from, const IntervalSet& to) {
    Rational worst(0);
    for (const auto& c : from.components()) {
      worst = max(worst, dist(to, c.left));
      worst = max(worst, dist(to, c.right));
    }
    const auto comps = to.components();
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
      const Rational mid = (comps[i].right + comps[i + 1].left) / Rational(2);
      for (const auto& c : from.components()) {
        if (c.left <= mid && mid <= c.right) {
          worst = max(worst, dist(to, mid));
          break;
        }
      }
    }
    return worst;
  };
  return max(one_sided(a, b), one_sided(b, a));
}

namespace {

struct Triple {
  Rational a, b, c;
};

// triples inside the support hull with (c-b)/(b-a) log-spread across
// [2^-10, 2^10]; both inequalities stress extreme aspect ratios
std::optional<Triple> sample_triple(Rng& rng, const Rational& lo, const Rational& hi) {
  const Rational span = hi - lo;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const int uexp = static_cast<int>(rng.integer(0, 12));
    const Rational ab = span / Rational(1L << uexp);  // b - a
    const int vexp = static_cast<int>(rng.integer(-10, 10));
    const Rational bc = vexp >= 0 ? ab * Rational(1L << vexp) : ab / Rational(1L << (-vexp));
    const Rational width = ab + bc;
    if (width > span) continue;
    const Rational a = width == span ? lo : rng.rational(lo, hi - width);
    Triple t{a, a + ab, a + width};
    if (t.a < t.b && t.b < t.c) return t;
  }
  return std::nullopt;
}

IntervalSet sample_subset(Rng& rng, const Rational& a, const Rational& b) {
  const int k = static_cast<int>(rng.integer(0, 3));
  std::vector<std::pair<Rational, Rational>> raw;
  for (int i = 0; i < k; ++i) {
    const Rational p = rng.rational(a, b);
    const Rational q = rng.rational(a, b);
    if (p < q) raw.emplace_back(p, q);
    else if (q < p) raw.emplace_back(q, p);
  }
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace

InequalityReport reverse_holder_check(const StepWeight& w, double eps, const SampleBudget& b) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("reverse Holder eps must lie in (0,1)");
  InequalityReport rep;
  rep.tag = "reverse-holder";

  // prefix masses of w^{1+eps}: rational cell lengths, binary64 powers
  const auto breaks = w.breakpoints();
  std::vector<double> prefix(breaks.size(), 0.0);
  for (std::size_t i = 0; i < w.pieces(); ++i) {
    prefix[i + 1] = prefix[i] + std::pow(w.values()[i].to_double(), 1.0 + eps) *
                                    (breaks[i + 1] - breaks[i]).to_double();
  }
  auto power_mass = [&](const Rational& x) {
    if (x <= breaks.front()) return 0.0;
    if (x >= breaks.back()) return prefix.back();
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - breaks.begin());
    return prefix[i - 1] + std::pow(w.values()[i - 1].to_double(), 1.0 + eps) *
                               (x - breaks[i - 1]).to_double();
  };

  Rng rng(b.seed);
  for (int s = 0; s < b.samples; ++s) {
    const auto t = sample_triple(rng, w.support_left(), w.support_right());
    if (!t) { ++rep.skipped; continue; }
    const Rational wac = w.mass(t->a, t->c);
    if (wac.sign() == 0) { ++rep.skipped; continue; }
    const double lhs =
        std::pow((t->c - t->b).to_double(), eps) * (power_mass(t->b) - power_mass(t->a));
    const double rhs = 2.0 * std::pow(wac.to_double(), 1.0 + eps);
    const double ratio = lhs / rhs;
    ++rep.checked;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst = InequalityWitness{t->a, t->b, t->c, {}};
    }
  }
  return rep;
}

InequalityReport measure_ratio_check(const StepWeight& w, double exponent,
                                     const SampleBudget& b) {
  if (!(exponent > 0.0)) throw DomainError("measure-ratio exponent must be positive");
  InequalityReport rep;
  rep.tag = "measure-ratio";

  Rng rng(b.seed);
  for (int s = 0; s < b.samples; ++s) {
    const auto t = sample_triple(rng, w.support_left(), w.support_right());
    if (!t) { ++rep.skipped; continue; }
    const Rational wac = w.mass(t->a, t->c);
    if (wac.sign() == 0) { ++rep.skipped; continue; }
    const IntervalSet e = sample_subset(rng, t->a, t->b);
    const double lhs = (w.mass(e) / wac).to_double();
    const double rho = (e.measure() / (t->c - t->b)).to_double();
    const double rhs = 2.0 * std::pow(rho, exponent);
    const double ratio = rhs > 0 ? lhs / rhs : (lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    ++rep.checked;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst = InequalityWitness{t->a, t->b, t->c, e};
    }
  }
  return rep;
}

InequalityReport solyanik_converse_check(const StepWeight& w, double beta,
                                         const SolyanikCurve& curve, const SampleBudget& b) {
  if (!(beta > 1.0)) throw DomainError("converse check requires beta > 1");
  InequalityReport rep;
  rep.tag = "solyanik-converse";

  const double cutoff = std::exp(-beta);
  Rng rng(b.seed);
  for (int s = 0; s < b.samples; ++s) {
    const auto t = sample_triple(rng, w.support_left(), w.support_right());
    if (!t) { ++rep.skipped; continue; }
    const Rational wac = w.mass(t->a, t->c);
    if (wac.sign() == 0) { ++rep.skipped; continue; }
    const IntervalSet e = sample_subset(rng, t->a, t->b);
    const Rational we = w.mass(e);
    if (e.empty() || we.sign() == 0) {
      // lhs is 0: trivially fine, still counts as a checked sample
      ++rep.checked;
      continue;
    }
    const Rational rho = e.measure() / (t->c - t->b);
    const double lhs = (we / wac).to_double();

    double ratio;
    if (rho.to_double() >= cutoff) {
      // large-density branch: bound e * rho^{1/beta} >= 1 >= lhs
      ratio = lhs / (std::exp(1.0) * std::pow(rho.to_double(), 1.0 / beta));
    } else {
      // exact chain through the halo of the complement
      const IntervalSet eprime = e.complement_within(t->a, t->c);
      const Rational wep = w.mass(eprime);
      if (wep.sign() == 0) { ++rep.skipped; continue; }
      const Rational gamma =
          (Rational(1) - rho) * Rational((1L << 20) - 1, 1L << 20);
      const IntervalSet h = halo(eprime, gamma);
      if (!IntervalSet::single(t->a, t->c).subset_of(h)) {
        // the inclusion is a theorem for gamma < 1 - rho; failing it means a bug
        ratio = std::numeric_limits<double>::infinity();
      } else {
        // w(E) <= (w(H)/w(E') - 1) w(a,c), all exact; w(H) > w(E') is
        // guaranteed by the inclusion together with w(E) > 0
        const Rational wh = w.mass(h);
        ratio = ((we * wep) / ((wh - wep) * wac)).to_double();
      }
      // estimate-based flag: the fitted curve bound C(1-rho) - 1
      if (curve.resolved()) {
        const double est = *curve.prefactor * std::pow(rho.to_double(), *curve.delta);
        if (lhs > est * (1.0 + 1e-9)) ++rep.flagged;
      }
    }
    ++rep.checked;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst = InequalityWitness{t->a, t->b, t->c, e};
    }
  }
  return rep;
}

}  // namespace sunrise
