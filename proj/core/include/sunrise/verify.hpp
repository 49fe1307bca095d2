#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sunrise {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

/// Aggregated result of `verify`; serializes to the machine-readable
/// summary.  Output is canonical (fixed ordering), so identical inputs and
/// seeds produce byte-identical summaries regardless of thread count.
struct VerifySummary {
  std::string suite;  // requested suite ("all" or a single name)
  std::uint64_t seed = 0;
  int budget = 0;
  std::vector<SuiteReport> suites;

  bool pass() const {
    for (const auto& s : suites)
      if (!s.pass()) return false;
    return true;
  }
};

/// Known suites: rsun, halo, rhi, tauberian.
std::vector<std::string> verify_suite_names();

/// Runs one suite (or "all").  budget scales the instance counts.  When
/// inject_fault is set, the rsun suite perturbs one mass certificate before
/// checking it; the resulting failure exercises the harness itself.
VerifySummary run_verify(const std::string& suite, std::uint64_t seed, int budget,
                         bool inject_fault = false);

std::string to_json(const VerifySummary& summary, int indent = -1);

}  // namespace sunrise
