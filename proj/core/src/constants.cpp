#include "sunrise/constants.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sunrise/errors.hpp"

namespace sunrise {

std::string to_string(ConstantKind k) {
  switch (k) {
    case ConstantKind::A1: return "a1";
    case ConstantKind::Ap: return "ap";
    case ConstantKind::FujiiWilson: return "fw";
  }
  return "?";
}

SigmaWeight::SigmaWeight(const StepWeight& w, double p) : p_(p) {
  if (!(p > 1.0)) throw DomainError("sigma weight requires p > 1");
  for (const auto& v : w.values()) {
    if (v.sign() == 0)
      throw DomainError("zero weight value inside support: sigma is undefined");
  }
  breaks_.assign(w.breakpoints().begin(), w.breakpoints().end());
  values_.reserve(w.pieces());
  const double expo = -1.0 / (p - 1.0);
  for (const auto& v : w.values()) values_.push_back(std::pow(v.to_double(), expo));
  prefix_.reserve(breaks_.size());
  prefix_.push_back(0.0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    prefix_.push_back(prefix_.back() +
                      values_[i] * (breaks_[i + 1] - breaks_[i]).to_double());
  }
}

double SigmaWeight::mass(const Rational& a, const Rational& b) const {
  const Rational lo = max(a, breaks_.front());
  const Rational hi = min(b, breaks_.back());
  if (!(lo < hi)) return 0.0;
  auto at = [&](const Rational& x) {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
    if (i == 0) return 0.0;
    if (i >= breaks_.size()) return prefix_.back();
    return prefix_[i - 1] + values_[i - 1] * (x - breaks_[i - 1]).to_double();
  };
  return at(hi) - at(lo);
}

SigmaWeight sigma_weight(const StepWeight& w, double p) { return SigmaWeight(w, p); }

double ap_plus_objective(const StepWeight& w, const SigmaWeight& sigma, const Rational& a,
                         const Rational& b, const Rational& c) {
  if (!(a < b && b < c)) return 0.0;
  const double len = (c - a).to_double();
  const double wab = w.mass(a, b).to_double();
  const double sbc = sigma.mass(b, c);
  return (wab / len) * std::pow(sbc / len, sigma.p() - 1.0);
}

namespace {

// Best-so-far tracker with the deterministic tie-break of the spec: on an
// exact value tie the lexicographically smallest witness wins.  The fold is
// order-independent, which keeps parallel candidate evaluation reproducible.
template <typename W>
struct Best {
  double value = -1.0;
  W witness{};
  bool valid = false;

  static bool lex_less(const PointWitness& a, const PointWitness& b) { return a.x < b.x; }
  static bool lex_less(const PairWitness& a, const PairWitness& b) {
    if (a.a != b.a) return a.a < b.a;
    return a.b < b.b;
  }
  static bool lex_less(const TripleWitness& a, const TripleWitness& b) {
    if (a.a != b.a) return a.a < b.a;
    if (a.b != b.b) return a.b < b.b;
    return a.c < b.c;
  }

  void consider(double v, const W& w) {
    if (!valid || v > value) {
      value = v;
      witness = w;
      valid = true;
    } else if (v == value && lex_less(w, witness)) {
      witness = w;
    }
  }

  void merge(const Best& other) {
    if (other.valid) consider(other.value, other.witness);
  }
};

std::vector<Rational> breakpoints_and_midpoints(const StepWeight& w) {
  std::vector<Rational> axis;
  const auto breaks = w.breakpoints();
  axis.reserve(2 * breaks.size());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    axis.push_back(breaks[i]);
    if (i + 1 < breaks.size())
      axis.push_back((breaks[i] + breaks[i + 1]) / Rational(2));
  }
  return axis;
}

}  // namespace

ConstantEstimate ap_plus_lower(const StepWeight& w, double p, const SearchConfig& cfg) {
  cfg.validate();
  const SigmaWeight sigma(w, p);

  const auto axis = breakpoints_and_midpoints(w);
  const auto pool = axis_pool(axis, cfg.base_candidates);

  std::vector<TripleWitness> cands;
  cands.reserve(pool.size() * pool.size() * pool.size() / 6 + 1);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      for (std::size_t k = j + 1; k < pool.size(); ++k)
        cands.push_back(TripleWitness{pool[i], pool[j], pool[k]});

  const unsigned chunks = std::max<std::size_t>(1, std::min<std::size_t>(worker_threads() * 4, cands.size()));
  std::vector<Best<TripleWitness>> partial(chunks);
  const std::size_t per = (cands.size() + chunks - 1) / chunks;
  parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t ci = cb; ci < ce; ++ci) {
      const std::size_t lo = ci * per, hi = std::min(cands.size(), lo + per);
      for (std::size_t t = lo; t < hi; ++t) {
        partial[ci].consider(ap_plus_objective(w, sigma, cands[t].a, cands[t].b, cands[t].c),
                             cands[t]);
      }
    }
  });
  Best<TripleWitness> best;
  for (const auto& b : partial) best.merge(b);

  // coordinate-ascent refinement in shrinking brackets around the incumbent
  const Rational lo_clip = w.support_left();
  const Rational hi_clip = w.support_right();
  const Rational span = hi_clip - lo_clip;
  for (int r = 0; r < cfg.refine_rounds; ++r) {
    const Rational h = span * Rational(1, 4).pow(static_cast<unsigned long>(r) + 1);
    for (int cycle = 0; cycle < cfg.ascent_cycles; ++cycle) {
      for (int coord = 0; coord < 3; ++coord) {
        TripleWitness cur = best.witness;
        const Rational& center = coord == 0 ? cur.a : coord == 1 ? cur.b : cur.c;
        for (const Rational& x :
             uniform_grid(max(lo_clip, center - h), min(hi_clip, center + h),
                          cfg.base_candidates)) {
          TripleWitness trial = cur;
          (coord == 0 ? trial.a : coord == 1 ? trial.b : trial.c) = x;
          if (!(trial.a < trial.b && trial.b < trial.c)) continue;
          best.consider(ap_plus_objective(w, sigma, trial.a, trial.b, trial.c), trial);
        }
      }
    }
  }

  ConstantEstimate est;
  est.kind = ConstantKind::Ap;
  est.p = p;
  est.value = best.value;
  est.witness = best.witness;
  est.budget = cfg;
  return est;
}

ConstantEstimate a1_plus(const StepWeight& w, const SearchConfig& cfg) {
  cfg.validate();
  for (const auto& v : w.values())
    if (v.sign() == 0) throw DomainError("zero weight value inside support: A1+ is undefined");

  const auto breaks = w.breakpoints();
  const auto& cum = w.antiderivative();
  BackwardAverageMaximizer hull;

  // M-w is nonincreasing inside each constant piece, so the essential sup of
  // M-w/w over piece i is attained at the right limit of its left
  // breakpoint; breakpoint and per-cell midpoint candidates are exhaustive.
  Rational best_ratio(-1);
  Rational best_x;
  auto consider = [&](const Rational& ratio, const Rational& x) {
    if (ratio > best_ratio || (ratio == best_ratio && x < best_x)) {
      best_ratio = ratio;
      best_x = x;
    }
  };

  for (std::size_t i = 0; i < w.pieces(); ++i) {
    const Rational& t = breaks[i];
    const Rational& v = w.values()[i];
    if (i > 0) {
      if (auto s = hull.max_average(t, cum(t))) {
        // offer the breakpoint only when the backward averages dominate the
        // piece value; then M-w(t)/w(t+) re-evaluates to the same ratio
        if (*s >= v) consider(*s / v, t);
      }
    }
    hull.push(t, cum(t));

    const Rational mid = (breaks[i] + breaks[i + 1]) / Rational(2);
    Rational mm = v;
    if (auto s = hull.max_average(mid, cum(mid))) mm = max(mm, *s);
    consider(mm / v, mid);
  }

  ConstantEstimate est;
  est.kind = ConstantKind::A1;
  est.value = best_ratio.to_double();
  est.witness = PointWitness{best_x};
  est.budget = cfg;
  return est;
}

namespace {

struct Cell {
  Rational left, right;
  Rational value;
};

// (a,b) covered by the clipped pieces of w plus zero-valued filler outside
// the support hull.
std::vector<Cell> cells_covering(const StepWeight& w, const Rational& a, const Rational& b) {
  std::vector<Cell> cells;
  const auto breaks = w.breakpoints();
  if (a < breaks.front())
    cells.push_back(Cell{a, min(b, breaks.front()), Rational(0)});
  for (std::size_t i = 0; i < w.pieces(); ++i) {
    const Rational lo = max(breaks[i], a);
    const Rational hi = min(breaks[i + 1], b);
    if (lo < hi) cells.push_back(Cell{lo, hi, w.values()[i]});
  }
  if (b > breaks.back())
    cells.push_back(Cell{max(a, breaks.back()), b, Rational(0)});
  return cells;
}

struct MinusIntegrand {
  const Antiderivative& cum;
  Rational base;  // W(a)
  BackwardAverageMaximizer hull;

  double eval(const Rational& x, const Rational& piece_value) {
    Rational g = piece_value;
    if (hull.size() > 0) {
      const Rational wr = cum(x) - base;
      if (auto s = hull.max_average(x, wr)) g = max(g, *s);
    }
    return g.to_double();
  }
};

double simpson_rec(MinusIntegrand& f, const Rational& val, const Rational& u, double fu,
                   const Rational& m, double fm, const Rational& v, double fv, double whole,
                   double tol, int depth) {
  const Rational lm = (u + m) / Rational(2);
  const Rational rm = (m + v) / Rational(2);
  const double flm = f.eval(lm, val);
  const double frm = f.eval(rm, val);
  const double hl = (m - u).to_double() / 6.0;
  const double hr = (v - m).to_double() / 6.0;
  const double left = hl * (fu + 4.0 * flm + fm);
  const double right = hr * (fm + 4.0 * frm + fv);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return simpson_rec(f, val, u, fu, lm, flm, m, fm, left, tol / 2.0, depth - 1) +
         simpson_rec(f, val, m, fm, rm, frm, v, fv, right, tol / 2.0, depth - 1);
}

}  // namespace

double integrate_mminus_truncated(const StepWeight& w, const Rational& a, const Rational& b,
                                  double tol) {
  if (!(a < b)) throw DomainError("integration interval requires a < b");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const Rational total = w.mass(a, b);
  if (total.sign() == 0) throw DomainError("w(a,b) = 0: truncated M- integral undefined");

  const auto cells = cells_covering(w, a, b);
  MinusIntegrand f{w.antiderivative(), w.antiderivative()(a), {}};

  const double tol_total = tol * total.to_double();
  const double inv_len = 1.0 / (b - a).to_double();
  double sum = 0.0;
  for (const auto& cell : cells) {
    const Rational mid = (cell.left + cell.right) / Rational(2);
    const double fu = f.eval(cell.left, cell.value);
    const double fm = f.eval(mid, cell.value);
    const double fv = f.eval(cell.right, cell.value);
    const double whole = (cell.right - cell.left).to_double() / 6.0 * (fu + 4.0 * fm + fv);
    const double cell_tol =
        tol_total * (cell.right - cell.left).to_double() * inv_len;
    sum += simpson_rec(f, cell.value, cell.left, fu, mid, fm, cell.right, fv, whole,
                       std::max(cell_tol, 1e-300), 20);
    f.hull.push(cell.left, f.cum(cell.left) - f.base);
  }
  return sum;
}

double fujii_wilson_ratio(const StepWeight& w, const Rational& a, const Rational& b,
                          double tol) {
  return integrate_mminus_truncated(w, a, b, tol) / w.mass(a, b).to_double();
}

ConstantEstimate fujii_wilson(const StepWeight& w, const SearchConfig& cfg) {
  cfg.validate();

  const auto breaks = w.breakpoints();
  std::vector<Rational> sorted(breaks.begin(), breaks.end());
  const auto pool = axis_pool(sorted, cfg.base_candidates);

  std::vector<PairWitness> cands;
  cands.reserve(pool.size() * pool.size() / 2 + 2);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      cands.push_back(PairWitness{pool[i], pool[j]});
  // a pair inside one constant positive piece realizes ratio 1 exactly,
  // which certifies the estimate >= 1 for every weight
  for (std::size_t i = 0; i < w.pieces(); ++i) {
    if (w.values()[i].sign() > 0) {
      cands.push_back(PairWitness{breaks[i], breaks[i + 1]});
      break;
    }
  }

  auto ratio_of = [&](const PairWitness& pw) -> std::optional<double> {
    if (!(pw.a < pw.b)) return std::nullopt;
    if (w.mass(pw.a, pw.b).sign() == 0) return std::nullopt;
    return fujii_wilson_ratio(w, pw.a, pw.b, cfg.quad_tol);
  };

  const unsigned chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_threads() * 4, cands.size()));
  std::vector<Best<PairWitness>> partial(chunks);
  const std::size_t per = (cands.size() + chunks - 1) / chunks;
  parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t ci = cb; ci < ce; ++ci) {
      const std::size_t lo = ci * per, hi = std::min(cands.size(), lo + per);
      for (std::size_t t = lo; t < hi; ++t) {
        if (auto v = ratio_of(cands[t])) partial[ci].consider(*v, cands[t]);
      }
    }
  });
  Best<PairWitness> best;
  for (const auto& b : partial) best.merge(b);

  const Rational lo_clip = w.support_left();
  const Rational hi_clip = w.support_right();
  const Rational span = hi_clip - lo_clip;
  for (int r = 0; r < cfg.refine_rounds; ++r) {
    const Rational h = span * Rational(1, 4).pow(static_cast<unsigned long>(r) + 1);
    for (int cycle = 0; cycle < cfg.ascent_cycles; ++cycle) {
      for (int coord = 0; coord < 2; ++coord) {
        PairWitness cur = best.witness;
        const Rational& center = coord == 0 ? cur.a : cur.b;
        for (const Rational& x :
             uniform_grid(max(lo_clip, center - h), min(hi_clip, center + h),
                          cfg.base_candidates)) {
          PairWitness trial = cur;
          (coord == 0 ? trial.a : trial.b) = x;
          if (auto v = ratio_of(trial)) best.consider(*v, trial);
        }
      }
    }
  }

  ConstantEstimate est;
  est.kind = ConstantKind::FujiiWilson;
  est.value = best.value;
  est.witness = best.witness;
  est.budget = cfg;
  return est;
}

}  // namespace sunrise
