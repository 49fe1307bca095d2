#include "sunrise/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sunrise/constants.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/json_io.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/sampling.hpp"
#include "sunrise/tauberian.hpp"
#include "sunrise/weight_spec.hpp"

namespace sunrise {

namespace {

SearchConfig lean_config(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.base_candidates = 10;
  cfg.refine_rounds = 2;
  cfg.ascent_cycles = 2;
  cfg.quad_tol = 1e-5;
  cfg.seed = seed;
  return cfg;
}

std::string count_detail(int ok, int total) {
  std::ostringstream os;
  os << ok << "/" << total << " instances";
  return os.str();
}

SuiteReport rsun_suite(std::uint64_t seed, int budget, bool inject_fault) {
  SuiteReport rep;
  rep.suite = "rsun";
  Rng rng(seed);

  const Rational lo(-8), hi(8);
  const Rational min_len(1, 64);

  int cert_ok = 0, incl_ok = 0, excl_ok = 0;
  for (int t = 0; t < budget; ++t) {
    const IntervalSet e = rng.interval_set(lo, hi, 6, min_len);
    const Rational alpha(static_cast<long>(t % 9) + 1, 10);
    const Decomposition d = superlevel_indicator(e, alpha);

    bool certs = !d.components.empty();
    for (const auto& c : d.components) {
      if (c.mass != alpha * (c.right - c.left)) { certs = false; break; }
    }
    cert_ok += certs;

    const IntervalSet u = d.as_interval_set();
    incl_ok += e.subset_of(u);

    // a random rational point outside the superlevel set must not exceed alpha
    bool excl = true;
    for (int probe = 0; probe < 16; ++probe) {
      const Rational x = rng.rational(u.hull_left() - Rational(1), hi + Rational(1));
      if (u.contains(x)) continue;
      excl = mplus_indicator_at(e, x) <= alpha;
      break;
    }
    excl_ok += excl;
  }
  rep.cases.push_back({"mass-certificates", cert_ok == budget, count_detail(cert_ok, budget)});
  rep.cases.push_back({"interior-inclusion", incl_ok == budget, count_detail(incl_ok, budget)});
  rep.cases.push_back({"outside-exclusion", excl_ok == budget, count_detail(excl_ok, budget)});

  // grid-oracle agreement at step 1/256
  const int oracle_instances = std::max(10, budget / 10);
  int oracle_ok = 0;
  const Rational step(1, 256);
  for (int t = 0; t < oracle_instances; ++t) {
    const IntervalSet e = rng.interval_set(Rational(-2), Rational(2), 4, Rational(1, 32));
    const Rational alpha(static_cast<long>(t % 9) + 1, 10);
    const GridSpec g = GridSpec::covering(e, alpha, step);
    const IntervalSet exact = halo(e, alpha);
    const IntervalSet approx = grid_superlevel(e, alpha, g);
    if (!approx.empty() && hausdorff_distance(exact, approx) <= Rational(2) * step) ++oracle_ok;
  }
  rep.cases.push_back({"grid-oracle-agreement", oracle_ok == oracle_instances,
                       count_detail(oracle_ok, oracle_instances)});

  if (inject_fault) {
    // perturb one certificate; the check must notice
    const IntervalSet e = IntervalSet::single(Rational(0), Rational(1));
    Decomposition d = superlevel_indicator(e, Rational(1, 2));
    d.components.front().mass += Rational(1, 1000000);
    bool detected = false;
    for (const auto& c : d.components) {
      if (c.mass != d.alpha * (c.right - c.left)) detected = true;
    }
    // pass=false on detection: the injected fault must fail the run
    rep.cases.push_back({"certificate-perturbation", !detected,
                         detected ? "perturbed certificate detected (expected failure)"
                                  : "perturbation went unnoticed"});
  }
  return rep;
}

SuiteReport halo_suite(std::uint64_t seed, int budget) {
  SuiteReport rep;
  rep.suite = "halo";
  Rng rng(seed);

  // fixture: lambda=1/4, alpha=1/2, E=(0,1): H_lambda = (-3,1) and the
  // second alpha-iterate equals it
  {
    const IntervalSet e = IntervalSet::single(Rational(0), Rational(1));
    const IntervalSet hl = halo(e, Rational(1, 4));
    const auto chain = halo_iterate(e, Rational(1, 2), 2);
    const bool ok = hl == IntervalSet::single(Rational(-3), Rational(1)) &&
                    chain.iterates.back() == hl &&
                    halo_iteration_bound(Rational(1, 4), Rational(1, 2)) == 2;
    rep.cases.push_back({"fixture-quarter-half", ok, ok ? "H=(-3,1) at N=2" : "mismatch"});
  }

  int incl_ok = 0, ident_ok = 0, mono_ok = 0;
  for (int t = 0; t < budget; ++t) {
    const IntervalSet e = rng.interval_set(Rational(-4), Rational(4), 4, Rational(1, 64));
    // random rational 0 < lambda < alpha < 1 on a modest grid
    const long la = rng.integer(1, 61);
    const long al = rng.integer(la + 1, 63);
    const Rational lambda(la, 64), alpha(al, 64);

    const IntervalSet hl = halo(e, lambda);
    const int n = halo_iteration_bound(lambda, alpha);
    const auto chain = halo_iterate(e, alpha, n);
    incl_ok += hl.subset_of(chain.iterates.back());

    const IntervalSet ha = chain.iterates[1];
    ident_ok += ha.measure() == e.intersect(ha).measure() / alpha;

    mono_ok += ha.subset_of(hl);  // alpha >= lambda => H_alpha ⊆ H_lambda
  }
  rep.cases.push_back({"iteration-inclusion", incl_ok == budget, count_detail(incl_ok, budget)});
  rep.cases.push_back({"measure-identity", ident_ok == budget, count_detail(ident_ok, budget)});
  rep.cases.push_back({"level-monotonicity", mono_ok == budget, count_detail(mono_ok, budget)});
  return rep;
}

SuiteReport rhi_suite(std::uint64_t seed, int budget) {
  SuiteReport rep;
  rep.suite = "rhi";
  const SearchConfig cfg = lean_config(seed);

  for (const auto& name : gallery_names()) {
    const StepWeight w = gallery_weight(name);
    const double fw = fujii_wilson(w, cfg).value;

    SampleBudget sb;
    sb.samples = budget;
    sb.seed = seed ^ std::hash<std::string>{}(name);

    const auto rh = reverse_holder_check(w, 1.0 / (2.0 * fw), sb);
    rep.cases.push_back({"reverse-holder/" + name, rh.pass(),
                         "worst ratio " + std::to_string(rh.worst_ratio)});
    const auto mr = measure_ratio_check(w, 1.0 / (3.0 * fw), sb);
    rep.cases.push_back({"measure-ratio/" + name, mr.pass(),
                         "worst ratio " + std::to_string(mr.worst_ratio)});
  }

  // sharpness probe: a huge jump with eps far outside the guaranteed range
  // must produce a failing witness
  {
    const StepWeight jump({Rational(0), Rational(1), Rational(2)},
                          {Rational(1000000), Rational(1)});
    SampleBudget sb;
    sb.samples = std::max(1000, budget);
    sb.seed = seed;
    const auto rh = reverse_holder_check(jump, 0.9, sb);
    rep.cases.push_back({"sharpness-probe", !rh.pass(),
                         "worst ratio " + std::to_string(rh.worst_ratio)});
  }
  return rep;
}

SuiteReport tauberian_suite(std::uint64_t seed, int budget) {
  SuiteReport rep;
  rep.suite = "tauberian";
  const SearchConfig cfg = lean_config(seed);
  const StepWeight leb = gallery_weight("lebesgue");

  // Lebesgue identity: the single-interval family attains exactly 1/alpha
  {
    bool ok = true;
    for (const long num : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L}) {
      const Rational alpha(num, 10);
      const auto est = tauberian_lower(leb, alpha, family::kAnchored, cfg);
      if (est.exact_value != Rational(10, num)) { ok = false; break; }
    }
    for (const auto& alpha : {Rational(19, 20), Rational(99, 100)}) {
      const auto est = tauberian_lower(leb, alpha, family::kAnchored, cfg);
      if (est.exact_value != Rational(1) / alpha) ok = false;
    }
    rep.cases.push_back({"lebesgue-identity", ok, "estimate == 1/alpha exactly"});
  }

  // estimates never drop below 1, and reruns are bit-identical
  {
    bool ok = true;
    const StepWeight saw = gallery_weight("sawtooth");
    for (const long num : {1L, 3L, 5L, 7L, 9L}) {
      const Rational alpha(num, 10);
      const auto a = tauberian_lower(saw, alpha, family::kAll, cfg);
      const auto b = tauberian_lower(saw, alpha, family::kAll, cfg);
      if (a.exact_value < Rational(1) || a.exact_value != b.exact_value ||
          a.witness != b.witness)
        ok = false;
    }
    rep.cases.push_back({"lower-bound-and-determinism", ok, "value >= 1, reruns identical"});
  }

  // restricted weak type for Lebesgue: C0 = 2 at alpha0 = 1/2, p = 1, the
  // bound holds exactly
  {
    const std::vector<Rational> lambdas{Rational(1, 8), Rational(1, 4), Rational(1, 2),
                                        Rational(3, 4), Rational(7, 8)};
    const int trials = std::max(20, budget / 5);
    const auto wt = restricted_weak_type_check(leb, Rational(1, 2), lambdas, trials, seed,
                                               family::kAnchored, cfg);
    const bool ok = wt.violations.empty() && wt.hard_failures == 0 && wt.worst_slack >= 2.0;
    std::ostringstream os;
    os << "C0=" << wt.c0 << " worst slack " << wt.worst_slack;
    rep.cases.push_back({"weak-type-lebesgue", ok, os.str()});
  }
  return rep;
}

}  // namespace

std::vector<std::string> verify_suite_names() { return {"rsun", "halo", "rhi", "tauberian"}; }

VerifySummary run_verify(const std::string& suite, std::uint64_t seed, int budget,
                         bool inject_fault) {
  if (budget < 10) throw DomainError("verify budget must be at least 10");
  VerifySummary summary;
  summary.suite = suite;
  summary.seed = seed;
  summary.budget = budget;

  const auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  bool any = false;
  if (want("rsun")) { summary.suites.push_back(rsun_suite(seed, budget, inject_fault)); any = true; }
  if (want("halo")) { summary.suites.push_back(halo_suite(seed, budget)); any = true; }
  if (want("rhi")) { summary.suites.push_back(rhi_suite(seed, budget)); any = true; }
  if (want("tauberian")) { summary.suites.push_back(tauberian_suite(seed, budget)); any = true; }
  if (!any) throw DomainError("unknown verify suite: '" + suite + "'");
  return summary;
}

std::string to_json(const VerifySummary& summary, int indent) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : summary.suites) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : s.cases) {
      cases.push_back(nlohmann::ordered_json{
          {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    suites.push_back(nlohmann::ordered_json{
        {"suite", s.suite}, {"pass", s.pass()}, {"cases", std::move(cases)}});
  }
  nlohmann::ordered_json j{{"schema", kSchemaVersion},
                           {"suite", summary.suite},
                           {"seed", summary.seed},
                           {"budget", summary.budget},
                           {"pass", summary.pass()},
                           {"suites", std::move(suites)}};
  return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace sunrise
