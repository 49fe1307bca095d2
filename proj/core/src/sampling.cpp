#include "sunrise/sampling.hpp"

#include <algorithm>

#include "sunrise/errors.hpp"

namespace sunrise {

long Rng::integer(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(eng_);
}

Rational Rng::rational(const Rational& lo, const Rational& hi, int grain_bits) {
  if (!(lo < hi)) throw DomainError("rational sample needs lo < hi");
  const long den = 1L << grain_bits;
  const long k = integer(0, den);
  return lo + (hi - lo) * Rational(k, den);
}

IntervalSet Rng::interval_set(const Rational& lo, const Rational& hi, int max_components,
                              const Rational& min_len) {
  if (max_components < 1) throw DomainError("need at least one component");
  const int want = static_cast<int>(integer(1, max_components));
  // draw endpoint candidates until the separation constraint holds; relax
  // the component count if the window is too crowded
  for (int comps = want; comps >= 1; --comps) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Rational> pts;
      pts.reserve(static_cast<std::size_t>(2 * comps));
      for (int i = 0; i < 2 * comps; ++i) pts.push_back(rational(lo, hi));
      std::sort(pts.begin(), pts.end());
      bool ok = true;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] < min_len) { ok = false; break; }
      }
      if (!ok) continue;
      std::vector<std::pair<Rational, Rational>> raw;
      for (int i = 0; i < comps; ++i) raw.emplace_back(pts[2 * i], pts[2 * i + 1]);
      return IntervalSet::normalize(std::move(raw));
    }
  }
  // window cannot fit even one well-separated interval at this grain
  throw DomainError("window too small for requested interval samples");
}

}  // namespace sunrise
