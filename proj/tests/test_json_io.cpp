#include "doctest.h"

#include "helpers.hpp"
#include "sunrise/constants.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/json_io.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/sampling.hpp"
#include "sunrise/tauberian.hpp"
#include "sunrise/weight_spec.hpp"

using namespace testutil;
using namespace sunrise;

TEST_CASE("interval set JSON matches the interchange format") {
  const auto s = set({{0, 1}, {2, 3}});
  CHECK(to_json(s) == R"({"intervals":[["0","1"],["2","3"]]})");
  CHECK(interval_set_from_json(R"({"intervals":[["0","1"],["2","3"]]})") == s);
  CHECK(interval_set_from_json(R"({"intervals":[["0","1"],["1","2"]]})") == set({{0, 2}}));
  CHECK_THROWS_AS(interval_set_from_json(R"({"intervals":[["1","0"]]})"), DomainError);
  CHECK_THROWS_AS(interval_set_from_json("[]"), ParseError);
}

TEST_CASE("step weight JSON matches the interchange format") {
  const StepWeight w({R(0), R(1), R(2)}, {R(2), R(1)});
  CHECK(to_json(w) == R"({"breakpoints":["0","1","2"],"values":["2","1"]})");
  CHECK(step_weight_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(step_weight_from_json(R"({"breakpoints":["0"],"values":[]})"),
                  DomainError);
}

TEST_CASE("round trips re-parse into equal values") {
  Rng rng(2024);
  for (int t = 0; t < 50; ++t) {
    const auto s = rng.interval_set(R(-8), R(8), 5, R(1, 64));
    CHECK(interval_set_from_json(to_json(s)) == s);
  }

  const auto d = superlevel_indicator(set({{0, 1}, {2, 3}}), R(2, 3));
  const auto d2 = decomposition_from_json(to_json(d));
  CHECK(d2.alpha == d.alpha);
  REQUIRE(d2.components.size() == d.components.size());
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    CHECK(d2.components[i].left == d.components[i].left);
    CHECK(d2.components[i].right == d.components[i].right);
    CHECK(d2.components[i].mass == d.components[i].mass);
  }

  const auto chain = halo_iterate(set({{0, 1}}), R(1, 2), 3);
  const auto chain2 = halo_chain_from_json(to_json(chain));
  CHECK(chain2.alpha == chain.alpha);
  CHECK(chain2.base == chain.base);
  CHECK(chain2.iterates == chain.iterates);

  SearchConfig cfg;
  cfg.base_candidates = 5;
  cfg.seed = 12345;
  const auto cfg2 = search_config_from_json(to_json(cfg));
  CHECK(cfg2.base_candidates == cfg.base_candidates);
  CHECK(cfg2.seed == cfg.seed);
  CHECK(cfg2.quad_tol == cfg.quad_tol);
}

TEST_CASE("estimate documents carry schema and re-parse") {
  SearchConfig cfg;
  cfg.base_candidates = 8;
  cfg.refine_rounds = 4;
  const StepWeight w({R(0), R(1), R(2)}, {R(2), R(1)});

  const auto a1 = a1_plus(w, cfg);
  const std::string text = to_json(a1);
  CHECK(text.find("\"schema\":1") != std::string::npos);
  const auto back = constant_estimate_from_json(text);
  CHECK(back.kind == a1.kind);
  CHECK(back.value == a1.value);
  CHECK(std::get<PointWitness>(back.witness).x == std::get<PointWitness>(a1.witness).x);

  const auto tb = tauberian_lower(w, R(1, 2), family::kAnchored, cfg);
  const auto tb2 = tauberian_estimate_from_json(to_json(tb));
  CHECK(tb2.alpha == tb.alpha);
  CHECK(tb2.exact_value == tb.exact_value);
  CHECK(tb2.witness == tb.witness);
  CHECK(tb2.value == tb.value);

  const auto rep = reverse_holder_check(w, 0.25, {200, 3});
  const auto rep2 = inequality_report_from_json(to_json(rep));
  CHECK(rep2.tag == rep.tag);
  CHECK(rep2.checked == rep.checked);
  CHECK(rep2.worst_ratio == rep.worst_ratio);
  CHECK(rep2.pass() == rep.pass());
}

TEST_CASE("solyanik CSV has the exact column contract") {
  const StepWeight leb = make_lebesgue(R(0), R(100));
  SearchConfig cfg;
  cfg.base_candidates = 8;
  cfg.refine_rounds = 2;
  std::vector<Rational> alphas{R(9, 10), R(92, 100), R(95, 100), R(99, 100)};
  const auto curve = solyanik_fit(leb, alphas, family::kAnchored, cfg);
  const std::string csv = solyanik_csv(curve);
  CHECK(csv.rfind("alpha,value,value_minus_1\n", 0) == 0);
  CHECK(csv.find("0.9,") != std::string::npos);
  // one line per point plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("set shorthand parsing") {
  CHECK(parse_set_arg("0,1") == set({{0, 1}}));
  CHECK(parse_set_arg("0,1;2,3") == set({{0, 1}, {2, 3}}));
  CHECK(parse_set_arg("2,3;0,1") == set({{0, 1}, {2, 3}}));
  CHECK(parse_set_arg("-1/2,1") == IntervalSet::single(R(-1, 2), R(1)));
  CHECK(parse_set_arg(R"({"intervals":[["0","1"]]})") == set({{0, 1}}));
  CHECK_THROWS_AS(parse_set_arg("nope"), ParseError);
  CHECK_THROWS_AS(parse_set_arg("1,0"), DomainError);
  CHECK_THROWS_AS(parse_set_arg(""), ParseError);
}
