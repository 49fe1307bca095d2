#include "doctest.h"

#include "helpers.hpp"
#include "sunrise/errors.hpp"
#include "sunrise/sampling.hpp"

using namespace testutil;
using sunrise::DomainError;
using sunrise::Rng;

TEST_CASE("normalize merges touching and overlapping intervals") {
  CHECK(set({{0, 1}, {1, 2}}) == set({{0, 2}}));
  CHECK(set({{0, 3}, {1, 2}}) == set({{0, 3}}));
  CHECK(set({{2, 3}, {0, 1}}) == set({{0, 1}, {2, 3}}));
  CHECK(set({{0, 2}, {1, 3}, {5, 6}}).size() == 2);
}

TEST_CASE("normalize is idempotent and rejects degenerate pairs") {
  const auto s = set({{0, 1}, {1, 2}, {4, 5}});
  std::vector<std::pair<Rational, Rational>> raw;
  for (const auto& c : s.components()) raw.emplace_back(c.left, c.right);
  CHECK(IntervalSet::normalize(raw) == s);

  CHECK_THROWS_AS(IntervalSet::single(R(1), R(1)), DomainError);
  CHECK_THROWS_AS(IntervalSet::single(R(2), R(1)), DomainError);
}

TEST_CASE("measure fixtures") {
  CHECK(set({{0, 1}, {2, 3}}).measure() == R(2));
  CHECK(IntervalSet().measure() == R(0));
  CHECK(IntervalSet::single(R(-1, 2), R(1)).measure() == R(3, 2));
}

TEST_CASE("measure agrees with an independent sweep on random raw input") {
  Rng rng(20240811);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::pair<Rational, Rational>> raw;
    const int n = static_cast<int>(rng.integer(1, 8));
    for (int i = 0; i < n; ++i) {
      const Rational a = rng.rational(R(-10), R(10), 8);
      const Rational b = rng.rational(R(-10), R(10), 8);
      if (a < b) raw.emplace_back(a, b);
      else if (b < a) raw.emplace_back(b, a);
    }
    if (raw.empty()) continue;
    CHECK(IntervalSet::normalize(raw).measure() == sweep_union_length(raw));
  }
}

TEST_CASE("cumulative and intersection measure are exact") {
  const auto s = set({{0, 1}, {2, 4}});
  CHECK(s.cumulative(R(-1)) == R(0));
  CHECK(s.cumulative(R(1, 2)) == R(1, 2));
  CHECK(s.cumulative(R(3)) == R(2));
  CHECK(s.cumulative(R(9)) == R(3));
  CHECK(s.intersection_measure(R(1, 2), R(3)) == R(3, 2));
  CHECK(s.intersection_measure(R(5), R(9)) == R(0));
}

TEST_CASE("set algebra: intersect, unite, difference, subset") {
  const auto a = set({{0, 2}, {3, 5}});
  const auto b = set({{1, 4}});
  CHECK(a.intersect(b) == set({{1, 2}, {3, 4}}));
  CHECK(a.unite(b) == set({{0, 5}}));
  CHECK(a.difference(b) == set({{0, 1}, {4, 5}}));
  CHECK(b.complement_within(R(0), R(5)) == set({{0, 1}, {4, 5}}));
  CHECK(set({{1, 2}}).subset_of(a));
  CHECK(!b.subset_of(a));
  CHECK(a.subset_of(a.unite(b)));
}

TEST_CASE("set algebra properties on random instances") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto a = rng.interval_set(R(-8), R(8), 4, R(1, 16));
    const auto b = rng.interval_set(R(-8), R(8), 4, R(1, 16));
    // inclusion-exclusion on measures, exact
    CHECK(a.unite(b).measure() + a.intersect(b).measure() == a.measure() + b.measure());
    // difference decomposes a
    CHECK(a.difference(b).measure() + a.intersect(b).measure() == a.measure());
    CHECK(a.intersect(b).subset_of(a));
    CHECK(a.subset_of(a.unite(b)));
  }
}

TEST_CASE("open-set membership and translation") {
  const auto s = set({{0, 1}});
  CHECK(s.contains(R(1, 2)));
  CHECK(!s.contains(R(0)));
  CHECK(!s.contains(R(1)));
  CHECK(s.translate(R(5)) == set({{5, 6}}));
  CHECK(s.translate(R(5)).translate(R(-5)) == s);
}
