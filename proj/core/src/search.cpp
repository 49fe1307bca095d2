#include "sunrise/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <thread>

#include "sunrise/errors.hpp"

namespace sunrise {

void SearchConfig::validate() const {
  if (base_candidates < 1 || refine_rounds < 1 || ascent_cycles < 1)
    throw DomainError("search config counts must be >= 1");
  if (!(quad_tol > 0.0) || quad_tol > 1e-3)
    throw DomainError("quadrature tolerance must lie in (0, 1e-3]");
}

std::vector<std::size_t> subdivision_order(std::size_t n) {
  std::vector<std::size_t> order;
  if (n == 0) return order;
  order.reserve(n);
  order.push_back(0);
  if (n == 1) return order;
  order.push_back(n - 1);
  std::deque<std::pair<std::size_t, std::size_t>> queue{{0, n - 1}};
  while (!queue.empty()) {
    const auto [lo, hi] = queue.front();
    queue.pop_front();
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) continue;
    order.push_back(mid);
    queue.emplace_back(lo, mid);
    queue.emplace_back(mid, hi);
  }
  return order;
}

std::vector<Rational> axis_pool(std::span<const Rational> sorted_values, int count) {
  const std::size_t n = sorted_values.size();
  const std::size_t take = (count <= 0) ? n : std::min(n, static_cast<std::size_t>(count));
  const auto order = subdivision_order(n);
  std::vector<Rational> pool;
  pool.reserve(take);
  for (std::size_t i = 0; i < take; ++i) pool.push_back(sorted_values[order[i]]);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, int count) {
  std::vector<Rational> grid;
  if (count <= 1 || !(lo < hi)) {
    grid.push_back(lo);
    return grid;
  }
  const Rational step = (hi - lo) / Rational(count - 1);
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid.push_back(lo + step * Rational(i));
  return grid;
}

unsigned worker_threads() {
  static const unsigned cached = [] {
    if (const char* env = std::getenv("SUNRISE_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) return static_cast<unsigned>(std::min(v, 64L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return std::max(1u, std::min(hc == 0 ? 1u : hc, 8u));
  }();
  return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& run_range) {
  if (n == 0) return;
  const unsigned workers = std::min<std::size_t>(worker_threads(), n);
  if (workers <= 1) {
    run_range(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] { run_range(begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace sunrise
