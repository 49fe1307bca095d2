#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/sampling.hpp"
#include "sunrise/tauberian.hpp"
#include "sunrise/weight_spec.hpp"

using namespace testutil;
using namespace sunrise;

TEST_CASE("grid M+ agrees with the exact evaluation") {
  const auto e = set({{0, 1}});
  for (long denom : {16L, 64L, 256L}) {
    const GridSpec g = GridSpec::covering(e, R(1, 2), R(1, denom));
    CHECK(grid_mplus(e, R(-1), g) == R(1, 2));
    CHECK(grid_mplus(e, R(1, 2), g) == R(1));
  }
  Rng rng(11);
  const GridSpec g = GridSpec::covering(e, R(1, 4), R(1, 32));
  for (int t = 0; t < 200; ++t) {
    const Rational x = rng.rational(g.window_left, g.window_right, 8);
    CHECK(grid_mplus(e, x, g) == mplus_indicator_at(e, x));
  }
  CHECK_THROWS_AS(grid_mplus(e, R(-1000), g), DomainError);
}

TEST_CASE("grid superlevel set tracks the exact one to two grid cells") {
  const auto e = set({{0, 1}});
  const GridSpec g = GridSpec::covering(e, R(1, 2), R(1, 64));
  const auto approx = grid_superlevel(e, R(1, 2), g);
  const auto exact = halo(e, R(1, 2));
  CHECK(hausdorff_distance(exact, approx) <= R(2, 64));

  // refinement: halving the step does not worsen the distance by more than
  // the step change
  const GridSpec g2 = GridSpec::covering(e, R(1, 2), R(1, 128));
  const auto approx2 = grid_superlevel(e, R(1, 2), g2);
  CHECK(hausdorff_distance(exact, approx2) <=
        hausdorff_distance(exact, approx) + R(1, 128));

  CHECK_THROWS_AS(grid_superlevel(e, R(1), g), DomainError);
}

TEST_CASE("grid/exact agreement on seeded random instances") {
  Rng rng(404);
  const Rational step(1, 256);
  for (int t = 0; t < 50; ++t) {
    const auto e = rng.interval_set(R(-2), R(2), 4, R(1, 32));
    const Rational alpha(rng.integer(1, 9), 10);
    const GridSpec g = GridSpec::covering(e, alpha, step);
    const auto exact = halo(e, alpha);
    const auto approx = grid_superlevel(e, alpha, g);
    REQUIRE(!approx.empty());
    CHECK(hausdorff_distance(exact, approx) <= R(2) * step);
  }
}

TEST_CASE("hausdorff distance fixtures") {
  CHECK(hausdorff_distance(set({{0, 1}}), set({{0, 1}})) == R(0));
  CHECK(hausdorff_distance(set({{0, 1}}), set({{2, 3}})) == R(2));
  CHECK(hausdorff_distance(set({{0, 10}}), set({{0, 4}, {6, 10}})) == R(1));
  CHECK(hausdorff_distance(set({{0, 1}, {8, 9}}), set({{0, 9}})) == R(7, 2));
  CHECK(hausdorff_distance(IntervalSet(), IntervalSet()) == R(0));
  CHECK_THROWS_AS(hausdorff_distance(set({{0, 1}}), IntervalSet()), DomainError);
}

TEST_CASE("reverse Holder check: Lebesgue passes at any admissible eps") {
  const StepWeight leb = make_lebesgue(R(0), R(100));
  for (double eps : {0.1, 0.5, 0.9}) {
    const auto rep = reverse_holder_check(leb, eps, {2000, 7});
    CHECK(rep.checked > 0);
    CHECK(rep.pass());
  }
  CHECK_THROWS_AS(reverse_holder_check(leb, 1.5, {10, 7}), DomainError);
}

TEST_CASE("reverse Holder check at the guaranteed exponent for gallery weights") {
  SearchConfig cfg;
  cfg.base_candidates = 10;
  cfg.refine_rounds = 2;
  cfg.ascent_cycles = 2;
  cfg.quad_tol = 1e-5;
  for (const char* name : {"step-up", "step-down", "sawtooth"}) {
    const StepWeight w = gallery_weight(name);
    const double fw = fujii_wilson(w, cfg).value;
    const auto rep = reverse_holder_check(w, 1.0 / (2.0 * fw), {5000, 11});
    CHECK(rep.pass());
  }
}

TEST_CASE("reverse Holder sharpness: a large jump fails far outside the range") {
  const StepWeight jump({R(0), R(1), R(2)}, {R(1000000), R(1)});
  const auto rep = reverse_holder_check(jump, 0.9, {5000, 3});
  CHECK(!rep.pass());
  CHECK(rep.worst.has_value());
}

TEST_CASE("measure ratio check passes at the guaranteed exponent") {
  const StepWeight leb = make_lebesgue(R(0), R(100));
  const auto rep = measure_ratio_check(leb, 0.5 / 1.5, {3000, 13});
  CHECK(rep.pass());

  SearchConfig cfg;
  cfg.base_candidates = 10;
  cfg.refine_rounds = 2;
  cfg.ascent_cycles = 2;
  cfg.quad_tol = 1e-5;
  const StepWeight saw = gallery_weight("sawtooth");
  const double fw = fujii_wilson(saw, cfg).value;
  const auto rep2 = measure_ratio_check(saw, 1.0 / (3.0 * fw), {3000, 13});
  CHECK(rep2.pass());
}

TEST_CASE("solyanik converse chain holds exactly per sample") {
  SearchConfig cfg;
  cfg.base_candidates = 10;
  cfg.refine_rounds = 2;
  cfg.ascent_cycles = 2;
  cfg.quad_tol = 1e-5;
  const StepWeight leb = make_lebesgue(R(0), R(100));
  std::vector<Rational> alphas;
  for (long k = 0; k < 10; ++k) alphas.push_back(R(90 + k, 100));
  const auto curve = solyanik_fit(leb, alphas, family::kAnchored, cfg);
  const auto rep = solyanik_converse_check(leb, 2.0, curve, {1000, 5});
  CHECK(rep.checked > 0);
  CHECK(rep.pass());
  CHECK_THROWS_AS(solyanik_converse_check(leb, 0.5, curve, {10, 5}), DomainError);
}
