#include "doctest.h"

#include "helpers.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/sampling.hpp"

using namespace testutil;
using namespace sunrise;

namespace {

Rational naive_mminus(const StepWeight& w, const Rational& x) {
  Rational best = w.value_left_of(x);
  const auto& cum = w.antiderivative();
  for (const auto& t : w.breakpoints()) {
    if (!(t < x)) break;
    best = max(best, (cum(x) - cum(t)) / (x - t));
  }
  return best;
}

}  // namespace

TEST_CASE("M+ of an indicator: closed-form fixtures") {
  const auto e = set({{0, 1}});
  // sup over r of |E ∩ (x,r)|/(r-x) = 1/(1-x) for x < 0; grid oracle agrees
  CHECK(mplus_indicator_at(e, R(-1)) == R(1, 2));
  const GridSpec g = GridSpec::covering(e, R(1, 2), R(1, 64));
  CHECK(grid_mplus(e, R(-1), g) == R(1, 2));
  CHECK(mplus_indicator_at(e, R(1, 2)) == R(1));
  CHECK(mplus_indicator_at(e, R(2)) == R(0));
  CHECK(mplus_indicator_at(e, R(0)) == R(1));  // left endpoint: h->0 inside
  CHECK_THROWS_AS(mplus_indicator_at(IntervalSet(), R(0)), DomainError);
}

TEST_CASE("superlevel decomposition fixtures from closed forms") {
  SUBCASE("single interval, alpha = 1/2") {
    const auto d = superlevel_indicator(set({{0, 1}}), R(1, 2));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].left == R(-1));
    CHECK(d.components[0].right == R(1));
    CHECK(d.components[0].mass == R(1));
    CHECK(d.components[0].mass == d.alpha * (d.components[0].right - d.components[0].left));
  }
  SUBCASE("two intervals, alpha = 2/3") {
    const auto d = superlevel_indicator(set({{0, 1}, {2, 3}}), R(2, 3));
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].left == R(-1, 2));
    CHECK(d.components[0].right == R(1));
    CHECK(d.components[1].left == R(3, 2));
    CHECK(d.components[1].right == R(3));
    CHECK(d.components[0].mass == R(1));
    CHECK(d.components[1].mass == R(1));
  }
  SUBCASE("alpha close to 1") {
    const auto d = superlevel_indicator(set({{0, 1}}), R(9, 10));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].left == R(-1, 9));
    CHECK(d.components[0].right == R(1));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(superlevel_indicator(set({{0, 1}}), R(0)), DomainError);
    CHECK_THROWS_AS(superlevel_indicator(set({{0, 1}}), R(1)), DomainError);
    CHECK_THROWS_AS(superlevel_indicator(set({{0, 1}}), R(3, 2)), DomainError);
    CHECK_THROWS_AS(superlevel_indicator(IntervalSet(), R(1, 2)), DomainError);
  }
}

TEST_CASE("rising-sun certificates hold exactly on random instances") {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto e = rng.interval_set(R(-8), R(8), 6, R(1, 64));
    const Rational alpha(rng.integer(1, 9), 10);
    const auto d = superlevel_indicator(e, alpha);
    REQUIRE(!d.components.empty());
    for (const auto& c : d.components) {
      CHECK(c.mass == alpha * (c.right - c.left));
      // strengthened certificate at a midpoint: |E ∩ (x, b_j)| >= alpha(b_j - x)
      const Rational x = (c.left + c.right) / R(2);
      CHECK(e.cumulative(c.right) - e.cumulative(x) >= alpha * (c.right - x));
    }
    // interior of E is contained in the superlevel set
    const auto u = d.as_interval_set();
    CHECK(e.subset_of(u));
  }
}

TEST_CASE("outside the superlevel set the maximal function stays <= alpha") {
  Rng rng(43);
  const auto e = rng.interval_set(R(-8), R(8), 6, R(1, 64));
  const Rational alpha(3, 10);
  const auto u = superlevel_indicator(e, alpha).as_interval_set();
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 1000; ++t) {
    const Rational x = rng.rational(u.hull_left() - R(2), R(12), 12);
    if (u.contains(x)) continue;
    ++checked;
    CHECK(mplus_indicator_at(e, x) <= alpha);
  }
  CHECK(checked == 1000);
}

TEST_CASE("halo fixtures and degenerate levels") {
  CHECK(halo(set({{0, 1}}), R(1, 4)) == set({{-3, 1}}));
  CHECK(halo(halo(set({{0, 1}}), R(1, 2)), R(1, 2)) == set({{-3, 1}}));
  CHECK_THROWS_AS(halo(set({{0, 1}}), R(1)), DomainError);
  CHECK_THROWS_AS(halo(set({{0, 1}}), R(5, 4)), DomainError);
}

TEST_CASE("halo iteration chain and nesting") {
  const auto chain = halo_iterate(set({{0, 1}}), R(1, 2), 2);
  REQUIRE(chain.iterates.size() == 3);
  CHECK(chain.iterates[0] == set({{0, 1}}));
  CHECK(chain.iterates[1] == set({{-1, 1}}));
  CHECK(chain.iterates[2] == set({{-3, 1}}));
  CHECK(halo_iterate(set({{0, 1}}), R(1, 2), 1).iterates.back() ==
        halo(set({{0, 1}}), R(1, 2)));
  CHECK_THROWS_AS(halo_iterate(set({{0, 1}}), R(1, 2), 0), DomainError);

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto e = rng.interval_set(R(-4), R(4), 4, R(1, 32));
    const auto c = halo_iterate(e, R(2, 5), 3);
    for (std::size_t k = 0; k + 1 < c.iterates.size(); ++k)
      CHECK(c.iterates[k].subset_of(c.iterates[k + 1]));
  }
}

TEST_CASE("halo iteration bound: exact rational powering") {
  CHECK(halo_iteration_bound(R(1, 4), R(1, 2)) == 2);
  CHECK(halo_iteration_bound(R(1, 8), R(1, 2)) == 3);
  CHECK(halo_iteration_bound(R(1, 5), R(1, 2)) == 3);
  CHECK_THROWS_AS(halo_iteration_bound(R(1, 2), R(1, 4)), DomainError);
  CHECK_THROWS_AS(halo_iteration_bound(R(1, 2), R(1, 2)), DomainError);

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const long la = rng.integer(1, 98);
    const long al = rng.integer(la + 1, 99);
    const Rational lambda(la, 100), alpha(al, 100);
    const int n = halo_iteration_bound(lambda, alpha);
    CHECK(alpha.pow(static_cast<unsigned long>(n)) <= lambda);
    if (n > 1) CHECK(alpha.pow(static_cast<unsigned long>(n) - 1) > lambda);
  }
}

TEST_CASE("halo iteration lemma: exact set inclusion on random instances") {
  Rng rng(2718);
  for (int t = 0; t < 100; ++t) {
    const auto e = rng.interval_set(R(-4), R(4), 4, R(1, 32));
    const long la = rng.integer(1, 30);
    const long al = rng.integer(la + 1, 31);
    const Rational lambda(la, 32), alpha(al, 32);
    const int n = halo_iteration_bound(lambda, alpha);
    const auto chain = halo_iterate(e, alpha, n);
    CHECK(halo(e, lambda).subset_of(chain.iterates.back()));
  }
}

TEST_CASE("halo measure identity and monotonicity") {
  Rng rng(31415);
  for (int t = 0; t < 100; ++t) {
    const auto e = rng.interval_set(R(-4), R(4), 4, R(1, 32));
    const Rational alpha(rng.integer(1, 9), 10);
    const auto h = halo(e, alpha);
    CHECK(h.measure() == e.intersect(h).measure() / alpha);
    CHECK(h.measure() <= e.measure() / alpha);

    const Rational beta = (alpha + R(1)) / R(2);  // alpha < beta < 1
    CHECK(halo(e, beta).subset_of(h));

    const auto sub = e.intersect(e.hull_left(), (e.hull_left() + e.hull_right()) / R(2));
    if (!sub.empty()) CHECK(halo(sub, alpha).subset_of(h));
  }
}

TEST_CASE("M- fixtures and hull agreement") {
  const StepWeight one({R(0), R(1)}, {R(1)});
  CHECK(mminus_weight_at(one, R(2)) == R(1, 2));
  CHECK(mminus_weight_at(one, R(1, 2)) == R(1));
  CHECK(mminus_weight_at(one, R(-3)) == R(0));

  const StepWeight w({R(0), R(1), R(2)}, {R(2), R(1)});
  CHECK(mminus_weight_at(w, R(3, 2)) == R(5, 3));

  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> breaks{R(0)};
    std::vector<Rational> values;
    const int n = static_cast<int>(rng.integer(1, 8));
    for (int i = 0; i < n; ++i) {
      breaks.push_back(breaks.back() + rng.rational(R(1, 8), R(2), 5));
      values.push_back(R(rng.integer(i == 0 ? 1 : 0, 9)));
    }
    const StepWeight rw(breaks, values);
    BackwardAverageMaximizer hull;
    const auto& cum = rw.antiderivative();
    // querying at each breakpoint must reproduce the naive candidate max
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      hull.push(breaks[i - 1], cum(breaks[i - 1]));
      const Rational expected = naive_mminus(rw, breaks[i]);
      Rational got = rw.value_left_of(breaks[i]);
      if (auto s = hull.max_average(breaks[i], cum(breaks[i]))) got = max(got, *s);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("mass halving sequence: fixtures and the halving invariant") {
  const auto e = set({{0, 1}});
  const auto xs = mass_halving_sequence(e, R(-1), R(1), 2);
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == R(-1));
  CHECK(xs[1] == R(1, 2));
  CHECK(xs[2] == R(3, 4));

  // mass median through a gap lands at the rightmost admissible point
  const auto e2 = set({{0, 1}, {2, 3}});
  const auto ys = mass_halving_sequence(e2, R(-1), R(3), 1);
  CHECK(ys[1] == R(2));

  CHECK_THROWS_AS(mass_halving_sequence(e, R(5), R(6), 1), DomainError);

  Rng rng(5150);
  for (int t = 0; t < 50; ++t) {
    const auto es = rng.interval_set(R(-4), R(4), 4, R(1, 32));
    const Rational alpha(rng.integer(1, 9), 10);
    const auto d = superlevel_indicator(es, alpha);
    const auto& c = d.components.front();
    const int depth = 5;
    const auto seq = mass_halving_sequence(es, c.left, c.right, depth);
    auto tail = [&](const Rational& x) {
      return es.cumulative(c.right) - es.cumulative(x);
    };
    for (std::size_t k = 1; k < seq.size(); ++k) {
      CHECK(seq[k - 1] < seq[k]);
      CHECK(tail(seq[k - 1]) == R(2) * tail(seq[k]));
    }
    // tail mass after depth d is the total divided by 2^d
    CHECK(tail(seq.back()) == es.intersection_measure(c.left, c.right) / R(1 << depth));
  }
}
