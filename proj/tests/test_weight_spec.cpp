#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/weight_spec.hpp"

using namespace testutil;
using namespace sunrise;

TEST_CASE("gallery entries resolve to valid weights") {
  for (const auto& name : gallery_names()) {
    const StepWeight w = gallery_weight(name);
    CHECK(w.total_mass() > R(0));
  }
  CHECK(gallery_weight("step-up").nondecreasing());
  CHECK(gallery_weight("lebesgue").pieces() == 1);
  CHECK_THROWS_AS(gallery_weight("no-such-weight"), DomainError);
}

TEST_CASE("exp sampling: piece structure and midpoint values") {
  const StepWeight w = make_exp_decay(R(0), R(4), -1.0, 8);
  CHECK(w.pieces() == 32);
  CHECK(w.support_left() == R(0));
  CHECK(w.support_right() == R(4));
  // first piece value is the exact rational of exp(-1/16)
  CHECK(w.values()[0] == Rational::from_double(std::exp(-1.0 / 16.0)));
  // decreasing profile
  for (std::size_t i = 0; i + 1 < w.pieces(); ++i) CHECK(w.values()[i + 1] < w.values()[i]);

  const StepWeight big = gallery_weight("exp-decay-4");
  CHECK(big.pieces() == 4 * 256);
}

TEST_CASE("weight argument shorthand forms") {
  CHECK(parse_weight_arg("lebesgue").resolve() == gallery_weight("lebesgue"));
  CHECK(parse_weight_arg("gallery:sawtooth").resolve() == gallery_weight("sawtooth"));
  CHECK(parse_weight_arg("lebesgue:0:5").resolve() == make_lebesgue(R(0), R(5)));
  CHECK(parse_weight_arg("piecewise:0,1,2;2,1").resolve() ==
        StepWeight({R(0), R(1), R(2)}, {R(2), R(1)}));
  const auto exp_spec = parse_weight_arg("exp:0:4:-1:8");
  CHECK(exp_spec.resolve() == make_exp_decay(R(0), R(4), -1.0, 8));

  CHECK_THROWS_AS(parse_weight_arg(""), ParseError);
  CHECK_THROWS_AS(parse_weight_arg("wat:1:2"), ParseError);
  CHECK_THROWS_AS(parse_weight_arg("piecewise:0,1;"), ParseError);
}

TEST_CASE("weight spec JSON round trip") {
  for (const auto& name : gallery_names()) {
    const WeightSpec spec = gallery_spec(name);
    const WeightSpec back = weight_spec_from_json(weight_spec_to_json(spec));
    CHECK(back.resolve() == spec.resolve());
  }
  // plain StepWeight documents are accepted as piecewise specs
  const auto spec = weight_spec_from_json(R"({"breakpoints":["0","1","2"],"values":["2","1"]})");
  CHECK(spec.resolve() == StepWeight({R(0), R(1), R(2)}, {R(2), R(1)}));

  CHECK_THROWS_AS(weight_spec_from_json("not json"), ParseError);
  CHECK_THROWS_AS(weight_spec_from_json(R"({"kind":"mystery"})"), ParseError);
}
