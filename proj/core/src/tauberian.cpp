#include "sunrise/tauberian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sunrise/errors.hpp"
#include "sunrise/sampling.hpp"

namespace sunrise {

std::string family_names(unsigned families) {
  std::string out;
  auto add = [&](const char* n) {
    if (!out.empty()) out += "+";
    out += n;
  };
  if (families & family::kAnchored) add("anchored");
  if (families & family::kRandomUnions) add("random");
  if (families & family::kCombs) add("comb");
  if (families & family::kAdapted) add("adapted");
  return out.empty() ? "none" : out;
}

unsigned parse_families(const std::string& csv) {
  if (csv.empty() || csv == "all") return family::kAll;
  unsigned out = 0;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t next = csv.find_first_of(",+", pos);
    const std::string tok = csv.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok == "anchored") out |= family::kAnchored;
    else if (tok == "random") out |= family::kRandomUnions;
    else if (tok == "comb" || tok == "combs") out |= family::kCombs;
    else if (tok == "adapted") out |= family::kAdapted;
    else if (tok == "all") out |= family::kAll;
    else throw ParseError("unknown candidate family: '" + tok + "'");
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

namespace {

struct TaggedCandidate {
  IntervalSet e;
  const char* tag;
};

void push_clipped(std::vector<TaggedCandidate>& out, const char* tag, const Rational& lo,
                  const Rational& hi, const Rational& wlo, const Rational& whi) {
  const Rational l = max(lo, wlo);
  const Rational h = min(hi, whi);
  if (l < h) out.push_back({IntervalSet::single(l, h), tag});
}

// (a) single subintervals anchored at breakpoints, dyadic length ladder
void anchored_candidates(std::vector<TaggedCandidate>& out, const StepWeight& w,
                         const SearchConfig& cfg) {
  const Rational& lo = w.support_left();
  const Rational& hi = w.support_right();
  const Rational span = hi - lo;
  std::vector<Rational> breaks(w.breakpoints().begin(), w.breakpoints().end());
  const auto anchors = axis_pool(breaks, cfg.base_candidates);
  for (const auto& t : anchors) {
    Rational len = span;
    for (int j = 0; j <= 16; ++j) {
      push_clipped(out, "anchored", t, t + len, lo, hi);
      push_clipped(out, "anchored", t - len, t, lo, hi);
      len /= Rational(2);
    }
  }
}

// (b) seeded unions of a few rational intervals
void random_candidates(std::vector<TaggedCandidate>& out, const StepWeight& w,
                       const Rational& alpha, const SearchConfig& cfg) {
  const Rational& lo = w.support_left();
  const Rational& hi = w.support_right();
  // mix alpha into the stream so each sweep point explores fresh sets while
  // staying reproducible
  const std::uint64_t mix =
      cfg.seed ^ (std::hash<std::string>{}(alpha.str()) | 1ULL);
  Rng rng(mix);
  const int count = 8 * cfg.base_candidates;
  for (int i = 0; i < count; ++i) {
    const int k = static_cast<int>(rng.integer(1, 4));
    std::vector<std::pair<Rational, Rational>> raw;
    for (int c = 0; c < k; ++c) {
      const Rational p = rng.rational(lo, hi);
      const Rational q = rng.rational(lo, hi);
      if (p < q) raw.emplace_back(p, q);
      else if (q < p) raw.emplace_back(q, p);
    }
    if (!raw.empty()) out.push_back({IntervalSet::normalize(std::move(raw)), "random"});
  }
}

// (c) combs: n equal intervals separated by equal gaps, right-anchored
void comb_candidates(std::vector<TaggedCandidate>& out, const StepWeight& w) {
  const Rational& lo = w.support_left();
  const Rational& hi = w.support_right();
  const Rational span = hi - lo;
  for (int n : {2, 4, 8, 16, 32}) {
    for (const auto& duty : {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      Rational width = span;
      for (int j = 0; j <= 8; ++j) {
        // n teeth of length duty*width/n, gaps fill the rest, flush right
        const Rational tooth = width * duty / Rational(n);
        const Rational pitch = width / Rational(n);
        std::vector<std::pair<Rational, Rational>> raw;
        for (int i = 0; i < n; ++i) {
          const Rational right = hi - pitch * Rational(i);
          const Rational left = right - tooth;
          if (left < lo) break;
          raw.emplace_back(left, right);
        }
        if (!raw.empty()) out.push_back({IntervalSet::normalize(std::move(raw)), "comb"});
        width /= Rational(2);
      }
    }
  }
}

// (d) E-mass on light cells that have heavy cells to their left; the halo
// of M+ grows leftward, so such sets pick up the heavy mass for free
void adapted_candidates(std::vector<TaggedCandidate>& out, const StepWeight& w,
                        const SearchConfig& cfg) {
  const std::size_t n = w.pieces();
  std::vector<std::size_t> by_value(n);
  for (std::size_t i = 0; i < n; ++i) by_value[i] = i;
  std::stable_sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) {
    return w.values()[a] < w.values()[b];
  });
  const std::size_t take = std::min<std::size_t>(n, static_cast<std::size_t>(cfg.base_candidates));
  std::size_t used = 0;
  for (std::size_t idx : by_value) {
    if (used >= take) break;
    // needs some heavier cell strictly to the left
    bool heavier_left = false;
    for (std::size_t j = 0; j < idx; ++j) {
      if (w.values()[j] > w.values()[idx]) { heavier_left = true; break; }
    }
    if (!heavier_left) continue;
    ++used;
    const Rational& l = w.breakpoints()[idx];
    const Rational& r = w.breakpoints()[idx + 1];
    out.push_back({IntervalSet::single(l, r), "adapted"});
    const Rational mid = (l + r) / Rational(2);
    out.push_back({IntervalSet::single(mid, r), "adapted"});
  }
  // pairs of the two lightest qualifying cells
  if (used >= 2) {
    std::vector<std::size_t> picked;
    for (std::size_t idx : by_value) {
      bool heavier_left = false;
      for (std::size_t j = 0; j < idx && !heavier_left; ++j)
        heavier_left = w.values()[j] > w.values()[idx];
      if (heavier_left) picked.push_back(idx);
      if (picked.size() == 2) break;
    }
    if (picked.size() == 2) {
      std::vector<std::pair<Rational, Rational>> raw;
      for (std::size_t idx : picked)
        raw.emplace_back(w.breakpoints()[idx], w.breakpoints()[idx + 1]);
      out.push_back({IntervalSet::normalize(std::move(raw)), "adapted"});
    }
  }
}

}  // namespace

TauberianEstimate tauberian_lower(const StepWeight& w, const Rational& alpha,
                                  unsigned families, const SearchConfig& cfg) {
  cfg.validate();
  if (!(Rational(0) < alpha && alpha < Rational(1)))
    throw DomainError("alpha must lie in (0,1), got " + alpha.str());
  if ((families & family::kAll) == 0) throw DomainError("no candidate families selected");

  std::vector<TaggedCandidate> cands;
  if (families & family::kAnchored) anchored_candidates(cands, w, cfg);
  if (families & family::kRandomUnions) random_candidates(cands, w, alpha, cfg);
  if (families & family::kCombs) comb_candidates(cands, w);
  if (families & family::kAdapted) adapted_candidates(cands, w, cfg);

  struct Local {
    bool valid = false;
    Rational ratio;
    const TaggedCandidate* cand = nullptr;
    std::size_t skipped = 0;

    void consider(const Rational& r, const TaggedCandidate& c) {
      if (!valid || r > ratio) {
        ratio = r;
        cand = &c;
        valid = true;
      } else if (r == ratio && c.e < cand->e) {
        cand = &c;
      }
    }
  };

  const unsigned chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_threads() * 4, cands.size()));
  std::vector<Local> partial(chunks);
  const std::size_t per = (cands.size() + chunks - 1) / chunks;
  parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t ci = cb; ci < ce; ++ci) {
      const std::size_t lo = ci * per, hi = std::min(cands.size(), lo + per);
      for (std::size_t t = lo; t < hi; ++t) {
        const Rational we = w.mass(cands[t].e);
        if (we.sign() == 0) {
          ++partial[ci].skipped;
          continue;
        }
        const Rational ratio = w.mass(halo(cands[t].e, alpha)) / we;
        partial[ci].consider(ratio, cands[t]);
      }
    }
  });

  Local best;
  std::size_t skipped = 0;
  for (const auto& p : partial) {
    skipped += p.skipped;
    if (p.valid) best.consider(p.ratio, *p.cand);
  }
  if (!best.valid)
    throw DomainError("every candidate set has zero weight mass; cannot bound C_w+");

  TauberianEstimate est;
  est.alpha = alpha;
  est.exact_value = best.ratio;
  est.value = best.ratio.to_double();
  est.witness = best.cand->e;
  est.family = best.cand->tag;
  est.candidates = cands.size();
  est.skipped = skipped;
  return est;
}

SolyanikCurve solyanik_fit(const StepWeight& w, std::vector<Rational> alphas,
                           unsigned families, const SearchConfig& cfg, FitWindow window) {
  if (alphas.size() < 4) throw DomainError("solyanik fit needs at least 4 alphas");
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  for (const auto& a : alphas)
    if (!(Rational(0) < a && a < Rational(1)))
      throw DomainError("alphas must lie in (0,1)");
  if (alphas.back().to_double() < 0.9)
    throw DomainError("solyanik fit needs alphas reaching at least 0.9");

  SolyanikCurve curve;
  curve.window_lo = window.lo;
  curve.window_hi = window.hi;
  curve.families = families;
  curve.seed = cfg.seed;
  curve.points.reserve(alphas.size());
  for (const auto& a : alphas) {
    const auto est = tauberian_lower(w, a, families, cfg);
    curve.points.push_back({a, est.value, est.value});
  }
  // monotone regularization: C_w+ is nonincreasing in alpha, so sweep a
  // running max from the largest alpha down
  double run = 1.0;
  for (std::size_t i = curve.points.size(); i-- > 0;) {
    run = std::max(run, curve.points[i].value);
    curve.points[i].regularized = run;
  }

  // least squares of log(value-1) against log(1-alpha) on usable window points
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& pt : curve.points) {
    const double a = pt.alpha.to_double();
    if (a < curve.window_lo || a > curve.window_hi) continue;
    const double excess = pt.regularized - 1.0;
    if (excess <= 1e-9) continue;
    const double x = std::log1p(-a);
    const double y = std::log(excess);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  if (n >= 4) {
    const double det = n * sxx - sx * sx;
    if (det > 0) {
      const double slope = (n * sxy - sx * sy) / det;
      const double intercept = (sy - slope * sx) / n;
      curve.delta = slope;
      curve.prefactor = std::exp(intercept);
    }
  }
  return curve;
}

WeakTypeReport restricted_weak_type_check(const StepWeight& w, const Rational& alpha0,
                                          std::span<const Rational> lambdas, int trials,
                                          std::uint64_t seed, unsigned families,
                                          const SearchConfig& cfg) {
  if (!(Rational(0) < alpha0 && alpha0 < Rational(1)))
    throw DomainError("alpha0 must lie in (0,1)");
  for (const auto& l : lambdas)
    if (!(Rational(0) < l && l < Rational(1)))
      throw DomainError("lambdas must lie in (0,1)");
  if (trials < 1) throw DomainError("trials must be positive");

  const auto c0est = tauberian_lower(w, alpha0, families, cfg);
  const double c0 = c0est.value;
  const double p = std::log(c0) / std::log(1.0 / alpha0.to_double());

  WeakTypeReport rep;
  rep.alpha0 = alpha0;
  rep.c0 = c0;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  rep.worst_slack = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  const Rational& lo = w.support_left();
  const Rational& hi = w.support_right();
  for (int t = 0; t < trials; ++t) {
    IntervalSet e;
    for (int attempt = 0; attempt < 32; ++attempt) {
      e = rng.interval_set(lo, hi, 4, (hi - lo) / Rational(1 << 10));
      if (w.mass(e).sign() > 0) break;
    }
    const Rational we = w.mass(e);
    if (we.sign() == 0) continue;

    for (const auto& lambda : lambdas) {
      ++rep.samples;
      const IntervalSet hl = halo(e, lambda);
      const double lhs = w.mass(hl).to_double();
      const double rhs = c0 * std::pow(1.0 / lambda.to_double(), p) * we.to_double();
      if (lhs > 0) rep.worst_slack = std::min(rep.worst_slack, rhs / lhs);
      if (lhs > rhs * (1.0 + 1e-12)) {
        const double expo = 1.0 + std::log(1.0 / lambda.to_double()) /
                                      std::log(1.0 / alpha0.to_double());
        rep.violations.push_back(
            WeakTypeViolation{e, lambda, lhs, rhs, std::pow(lhs / we.to_double(), 1.0 / expo)});
      }
      // exact facts that do not depend on the estimate
      if (lambda >= alpha0) {
        if (!hl.subset_of(halo(e, alpha0))) ++rep.hard_failures;
      } else {
        const int n = halo_iteration_bound(lambda, alpha0);
        const auto chain = halo_iterate(e, alpha0, n);
        if (!hl.subset_of(chain.iterates.back())) ++rep.hard_failures;
      }
    }
  }
  return rep;
}

double embedding_threshold(double fw, double c) {
  if (!(fw >= 1.0)) throw DomainError("Fujii-Wilson constant must be >= 1");
  if (!(c > 0.0)) throw DomainError("embedding constant must be positive");
  return std::exp(c * fw);
}

bool HolderReport::passes_with_exponent(double k, double exponent) const {
  const bool exact = (exponent == 1.0) && (k == std::floor(k)) && k >= 0;
  for (const auto& pe : pairs) {
    if (pe.x == pe.y) continue;
    if (exact) {
      const Rational kk(static_cast<long>(k));
      // (cx - cy) <= k * cy * (y-x)/x, all rational
      if ((pe.cx - pe.cy) * pe.x > kk * pe.cy * (pe.y - pe.x)) return false;
    } else {
      const double lhs = pe.cx.to_double() - pe.cy.to_double();
      const double rhs = k * pe.cy.to_double() *
                         std::pow(((pe.y - pe.x) / pe.x).to_double(), exponent);
      if (lhs > rhs * (1.0 + 1e-12)) return false;
    }
  }
  return true;
}

HolderReport holder_modulus_check(const StepWeight& w, std::span<const HolderPair> pairs,
                                  unsigned families, const SearchConfig& cfg) {
  for (const auto& pr : pairs) {
    if (!(Rational(0) < pr.x && pr.x <= pr.y && pr.y < Rational(1)))
      throw DomainError("holder pairs must satisfy 0 < x <= y < 1");
  }

  HolderReport rep;
  rep.fw = fujii_wilson(w, cfg).value;

  // evaluate the curve once per distinct point, then regularize
  std::map<Rational, Rational> curve;  // alpha -> exact lower bound
  for (const auto& pr : pairs) {
    curve.emplace(pr.x, Rational(0));
    curve.emplace(pr.y, Rational(0));
  }
  for (auto& [a, v] : curve) v = tauberian_lower(w, a, families, cfg).exact_value;
  Rational run(1);
  for (auto it = curve.rbegin(); it != curve.rend(); ++it) {
    run = max(run, it->second);
    it->second = run;
  }

  rep.pairs.reserve(pairs.size());
  for (const auto& pr : pairs)
    rep.pairs.push_back(HolderReport::PairEval{pr.x, pr.y, curve.at(pr.x), curve.at(pr.y)});

  // smallest required K over a fixed c ladder; report the (K, c) with the
  // minimal K (ties to the smaller c)
  double best_k = std::numeric_limits<double>::infinity();
  double best_c = 0;
  for (const double c : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double expo = 1.0 / (c * rep.fw);
    double need = 0;
    for (const auto& pe : rep.pairs) {
      if (pe.x == pe.y) continue;
      const double num = (pe.cx - pe.cy).to_double();
      const double den =
          pe.cy.to_double() * std::pow(((pe.y - pe.x) / pe.x).to_double(), expo);
      if (den > 0) need = std::max(need, num / den);
    }
    if (need < best_k) {
      best_k = need;
      best_c = c;
    }
  }
  rep.fitted_c = best_c;
  rep.fitted_k = best_k;
  rep.resolved = std::isfinite(best_k) && best_c > 0;
  return rep;
}

}  // namespace sunrise
