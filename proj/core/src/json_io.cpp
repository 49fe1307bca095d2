#include "sunrise/json_io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "sunrise/errors.hpp"

namespace sunrise {

using nlohmann::ordered_json;

namespace {

ordered_json parse_or_throw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const ordered_json& j, int indent) {
  return indent >= 0 ? j.dump(indent) : j.dump();
}

Rational rat(const ordered_json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("expected a rational string");
}

ordered_json set_json(const IntervalSet& s) {
  ordered_json intervals = ordered_json::array();
  for (const auto& c : s.components())
    intervals.push_back(ordered_json::array({c.left.str(), c.right.str()}));
  return ordered_json{{"intervals", std::move(intervals)}};
}

IntervalSet set_from(const ordered_json& j) {
  std::vector<std::pair<Rational, Rational>> raw;
  try {
    for (const auto& pair : j.at("intervals")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("interval must be a [left, right] pair");
      raw.emplace_back(rat(pair[0]), rat(pair[1]));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad interval set: ") + e.what());
  }
  return IntervalSet::normalize(std::move(raw));
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  if (const auto* p = std::get_if<PointWitness>(&w)) {
    j["x"] = p->x.str();
  } else if (const auto* p2 = std::get_if<PairWitness>(&w)) {
    j["a"] = p2->a.str();
    j["b"] = p2->b.str();
  } else if (const auto* p3 = std::get_if<TripleWitness>(&w)) {
    j["a"] = p3->a.str();
    j["b"] = p3->b.str();
    j["c"] = p3->c.str();
  }
  return j;
}

Witness witness_from(const ordered_json& j) {
  if (j.contains("x")) return PointWitness{rat(j.at("x"))};
  if (j.contains("c")) return TripleWitness{rat(j.at("a")), rat(j.at("b")), rat(j.at("c"))};
  return PairWitness{rat(j.at("a")), rat(j.at("b"))};
}

ordered_json config_json(const SearchConfig& cfg) {
  return ordered_json{{"base_candidates", cfg.base_candidates},
                      {"refine_rounds", cfg.refine_rounds},
                      {"ascent_cycles", cfg.ascent_cycles},
                      {"seed", cfg.seed},
                      {"quad_tol", cfg.quad_tol}};
}

SearchConfig config_from(const ordered_json& j) {
  SearchConfig cfg;
  try {
    if (j.contains("base_candidates")) cfg.base_candidates = j.at("base_candidates").get<int>();
    if (j.contains("refine_rounds")) cfg.refine_rounds = j.at("refine_rounds").get<int>();
    if (j.contains("ascent_cycles")) cfg.ascent_cycles = j.at("ascent_cycles").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("quad_tol")) cfg.quad_tol = j.at("quad_tol").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad search config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

}  // namespace

std::string to_json(const IntervalSet& s, int indent) { return dump(set_json(s), indent); }

IntervalSet interval_set_from_json(const std::string& text) {
  return set_from(parse_or_throw(text));
}

std::string to_json(const StepWeight& w, int indent) {
  ordered_json breaks = ordered_json::array();
  for (const auto& x : w.breakpoints()) breaks.push_back(x.str());
  ordered_json values = ordered_json::array();
  for (const auto& v : w.values()) values.push_back(v.str());
  return dump(ordered_json{{"breakpoints", std::move(breaks)}, {"values", std::move(values)}},
              indent);
}

StepWeight step_weight_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  std::vector<Rational> breaks, values;
  try {
    for (const auto& v : j.at("breakpoints")) breaks.push_back(rat(v));
    for (const auto& v : j.at("values")) values.push_back(rat(v));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad step weight: ") + e.what());
  }
  return StepWeight(std::move(breaks), std::move(values));
}

std::string to_json(const Decomposition& d, int indent) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : d.components) {
    comps.push_back(ordered_json{
        {"left", c.left.str()}, {"right", c.right.str()}, {"mass", c.mass.str()}});
  }
  return dump(ordered_json{{"schema", kSchemaVersion},
                           {"alpha", d.alpha.str()},
                           {"components", std::move(comps)}},
              indent);
}

Decomposition decomposition_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  Decomposition d;
  try {
    d.alpha = rat(j.at("alpha"));
    for (const auto& c : j.at("components")) {
      d.components.push_back(
          DecompositionComponent{rat(c.at("left")), rat(c.at("right")), rat(c.at("mass"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad decomposition: ") + e.what());
  }
  return d;
}

std::string to_json(const HaloChain& c, int indent) {
  ordered_json iters = ordered_json::array();
  for (const auto& s : c.iterates) iters.push_back(set_json(s));
  return dump(ordered_json{{"schema", kSchemaVersion},
                           {"alpha", c.alpha.str()},
                           {"base", set_json(c.base)},
                           {"iterates", std::move(iters)}},
              indent);
}

HaloChain halo_chain_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  HaloChain c;
  try {
    c.alpha = rat(j.at("alpha"));
    c.base = set_from(j.at("base"));
    for (const auto& s : j.at("iterates")) c.iterates.push_back(set_from(s));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad halo chain: ") + e.what());
  }
  return c;
}

std::string to_json(const SearchConfig& cfg, int indent) {
  return dump(config_json(cfg), indent);
}

SearchConfig search_config_from_json(const std::string& text) {
  return config_from(parse_or_throw(text));
}

std::string to_json(const ConstantEstimate& est, int indent) {
  ordered_json j{{"schema", kSchemaVersion}, {"kind", to_string(est.kind)}};
  if (est.kind == ConstantKind::Ap) j["p"] = est.p;
  j["value"] = est.value;
  j["witness"] = witness_json(est.witness);
  j["budget"] = config_json(est.budget);
  return dump(j, indent);
}

ConstantEstimate constant_estimate_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  ConstantEstimate est;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    est.kind = kind == "a1"   ? ConstantKind::A1
               : kind == "ap" ? ConstantKind::Ap
                              : ConstantKind::FujiiWilson;
    if (kind != "a1" && kind != "ap" && kind != "fw")
      throw ParseError("unknown constant kind: '" + kind + "'");
    if (j.contains("p")) est.p = j.at("p").get<double>();
    est.value = j.at("value").get<double>();
    est.witness = witness_from(j.at("witness"));
    est.budget = config_from(j.at("budget"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad constant estimate: ") + e.what());
  }
  return est;
}

std::string to_json(const TauberianEstimate& est, int indent) {
  return dump(ordered_json{{"schema", kSchemaVersion},
                           {"alpha", est.alpha.str()},
                           {"value", est.value},
                           {"exact_value", est.exact_value.str()},
                           {"witness", set_json(est.witness)},
                           {"family", est.family},
                           {"candidates", est.candidates},
                           {"skipped", est.skipped}},
              indent);
}

TauberianEstimate tauberian_estimate_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  TauberianEstimate est;
  try {
    est.alpha = rat(j.at("alpha"));
    est.value = j.at("value").get<double>();
    est.exact_value = rat(j.at("exact_value"));
    est.witness = set_from(j.at("witness"));
    est.family = j.at("family").get<std::string>();
    est.candidates = j.at("candidates").get<std::size_t>();
    est.skipped = j.at("skipped").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tauberian estimate: ") + e.what());
  }
  return est;
}

std::string to_json(const InequalityReport& rep, int indent) {
  ordered_json j{{"schema", kSchemaVersion},
                 {"tag", rep.tag},
                 {"checked", rep.checked},
                 {"skipped", rep.skipped},
                 {"flagged", rep.flagged},
                 {"worst_ratio", rep.worst_ratio},
                 {"pass", rep.pass()}};
  if (rep.worst) {
    j["witness"] = ordered_json{{"a", rep.worst->a.str()},
                                {"b", rep.worst->b.str()},
                                {"c", rep.worst->c.str()},
                                {"e", set_json(rep.worst->e)}};
  }
  return dump(j, indent);
}

InequalityReport inequality_report_from_json(const std::string& text) {
  const auto j = parse_or_throw(text);
  InequalityReport rep;
  try {
    rep.tag = j.at("tag").get<std::string>();
    rep.checked = j.at("checked").get<int>();
    rep.skipped = j.at("skipped").get<int>();
    rep.flagged = j.at("flagged").get<int>();
    rep.worst_ratio = j.at("worst_ratio").get<double>();
    if (j.contains("witness")) {
      const auto& w = j.at("witness");
      rep.worst = InequalityWitness{rat(w.at("a")), rat(w.at("b")), rat(w.at("c")),
                                    set_from(w.at("e"))};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad inequality report: ") + e.what());
  }
  return rep;
}

std::string to_json(const SolyanikCurve& curve, int indent) {
  ordered_json j{{"schema", kSchemaVersion},
                 {"resolved", curve.resolved()},
                 {"window", ordered_json::array({curve.window_lo, curve.window_hi})},
                 {"families", family_names(curve.families)},
                 {"seed", curve.seed}};
  if (curve.delta) j["delta"] = *curve.delta;
  if (curve.prefactor) j["K"] = *curve.prefactor;
  return dump(j, indent);
}

std::string to_json(const WeakTypeReport& rep, int indent) {
  ordered_json viols = ordered_json::array();
  for (const auto& v : rep.violations) {
    viols.push_back(ordered_json{{"e", set_json(v.e)},
                                 {"lambda", v.lambda.str()},
                                 {"lhs", v.lhs},
                                 {"rhs", v.rhs},
                                 {"implied_c0", v.implied_c0}});
  }
  return dump(ordered_json{{"schema", kSchemaVersion},
                           {"alpha0", rep.alpha0.str()},
                           {"c0", rep.c0},
                           {"p", rep.p},
                           {"trials", rep.trials},
                           {"seed", rep.seed},
                           {"samples", rep.samples},
                           {"worst_slack", rep.worst_slack},
                           {"violations", std::move(viols)},
                           {"hard_failures", rep.hard_failures}},
              indent);
}

std::string to_json(const HolderReport& rep, int indent) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : rep.pairs) {
    pairs.push_back(ordered_json{{"x", p.x.str()},
                                 {"y", p.y.str()},
                                 {"cx", p.cx.str()},
                                 {"cy", p.cy.str()}});
  }
  return dump(ordered_json{{"schema", kSchemaVersion},
                           {"fw", rep.fw},
                           {"fitted_c", rep.fitted_c},
                           {"fitted_k", rep.fitted_k},
                           {"resolved", rep.resolved},
                           {"pairs", std::move(pairs)}},
              indent);
}

std::string solyanik_csv(const SolyanikCurve& curve) {
  std::string out = "alpha,value,value_minus_1\n";
  char buf[64];
  for (const auto& p : curve.points) {
    out += p.alpha.decimal_str();
    std::snprintf(buf, sizeof(buf), ",%.17g,%.17g\n", p.regularized, p.regularized - 1.0);
    out += buf;
  }
  return out;
}

IntervalSet parse_set_arg(const std::string& text) {
  if (text.empty()) throw ParseError("empty set argument");
  if (text.front() == '{') return interval_set_from_json(text);
  // "a,b;c,d" shorthand
  std::vector<std::pair<Rational, Rational>> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(';', pos);
    const std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
    const std::size_t comma = part.find(',');
    if (comma == std::string::npos)
      throw ParseError("interval shorthand must look like \"a,b;c,d\"");
    raw.emplace_back(Rational::parse(part.substr(0, comma)),
                     Rational::parse(part.substr(comma + 1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace sunrise
