#pragma once

#include <string>

#include "sunrise/constants.hpp"
#include "sunrise/interval_set.hpp"
#include "sunrise/maximal.hpp"
#include "sunrise/oracle.hpp"
#include "sunrise/step_weight.hpp"
#include "sunrise/tauberian.hpp"

namespace sunrise {

// JSON interchange for the toolkit's types.  Rationals travel as canonical
// "p/q" (or integer) strings; every top-level document emitted by the CLI
// carries a "schema": 1 field.  Emission is deterministic: fixed key order,
// shortest round-trip doubles.

inline constexpr int kSchemaVersion = 1;

std::string to_json(const IntervalSet& s, int indent = -1);
IntervalSet interval_set_from_json(const std::string& text);

std::string to_json(const StepWeight& w, int indent = -1);
StepWeight step_weight_from_json(const std::string& text);

std::string to_json(const Decomposition& d, int indent = -1);
Decomposition decomposition_from_json(const std::string& text);

std::string to_json(const HaloChain& c, int indent = -1);
HaloChain halo_chain_from_json(const std::string& text);

std::string to_json(const SearchConfig& cfg, int indent = -1);
SearchConfig search_config_from_json(const std::string& text);

std::string to_json(const ConstantEstimate& est, int indent = -1);
ConstantEstimate constant_estimate_from_json(const std::string& text);

std::string to_json(const TauberianEstimate& est, int indent = -1);
TauberianEstimate tauberian_estimate_from_json(const std::string& text);

std::string to_json(const InequalityReport& rep, int indent = -1);
InequalityReport inequality_report_from_json(const std::string& text);

/// Fit summary only; the sampled points travel as CSV (see solyanik_csv).
std::string to_json(const SolyanikCurve& curve, int indent = -1);

std::string to_json(const WeakTypeReport& rep, int indent = -1);
std::string to_json(const HolderReport& rep, int indent = -1);

/// CSV with the exact header "alpha,value,value_minus_1"; values are the
/// regularized curve heights.
std::string solyanik_csv(const SolyanikCurve& curve);

/// "a,b;c,d" shorthand (or a JSON document) -> interval set.
IntervalSet parse_set_arg(const std::string& text);

}  // namespace sunrise
