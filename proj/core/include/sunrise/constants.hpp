#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sunrise/maximal.hpp"
#include "sunrise/rational.hpp"
#include "sunrise/search.hpp"
#include "sunrise/step_weight.hpp"

namespace sunrise {

enum class ConstantKind { A1, Ap, FujiiWilson };
std::string to_string(ConstantKind k);

struct PointWitness { Rational x; };
struct PairWitness { Rational a, b; };
struct TripleWitness { Rational a, b, c; };
using Witness = std::variant<PointWitness, PairWitness, TripleWitness>;

/// A certified lower bound for one of the one-sided constants, together
/// with the maximizing witness and the search budget that produced it.
/// Re-evaluating the objective at the witness reproduces `value` (exactly
/// for A1+/Ap+, within the quadrature tolerance for Fujii-Wilson).
struct ConstantEstimate {
  ConstantKind kind = ConstantKind::A1;
  double p = 0.0;  // the exponent for Ap, otherwise unused
  double value = 0.0;
  Witness witness;
  SearchConfig budget;
};

/// Pointwise and interval-mass evaluator for sigma = w^{-1/(p-1)} on the
/// support of w.  The breakpoints stay exact; values are binary64 powers.
/// Requires p > 1 and w strictly positive on its support.
class SigmaWeight {
 public:
  SigmaWeight(const StepWeight& w, double p);

  double p() const { return p_; }
  std::span<const Rational> breakpoints() const { return breaks_; }
  double value_on_piece(std::size_t i) const { return values_[i]; }

  /// sigma(a,b) restricted to the support of w.
  double mass(const Rational& a, const Rational& b) const;

 private:
  std::vector<Rational> breaks_;
  std::vector<double> values_;
  std::vector<double> prefix_;  // cumulative sigma mass at breakpoints
  double p_;
};

SigmaWeight sigma_weight(const StepWeight& w, double p);

/// The Ap+ objective (w(a,b)/|(a,c)|) * (sigma(b,c)/|(a,c)|)^{p-1} at one
/// triple a < b < c.
double ap_plus_objective(const StepWeight& w, const SigmaWeight& sigma, const Rational& a,
                         const Rational& b, const Rational& c);

/// Lower bound for [w]_{Ap+} = sup_{a<b<c} of the objective above, searched
/// over breakpoint/midpoint triples plus coordinate-ascent refinement.
ConstantEstimate ap_plus_lower(const StepWeight& w, double p, const SearchConfig& cfg);

/// [w]_{A1+} = || M-w / w ||_inf over the support.  For step weights M-w is
/// nonincreasing within each piece, so the sup is attained at a right limit
/// of a breakpoint; the returned value is exact up to one binary64
/// rounding.  Requires w strictly positive on its support.
ConstantEstimate a1_plus(const StepWeight& w, const SearchConfig& cfg);

/// Integral over (a,b) of M-(w 1_(a,b)) by cell-aligned adaptive Simpson
/// quadrature with absolute error <= tol * w(a,b).  The integrand is
/// evaluated exactly (rational) at every node.  Requires w(a,b) > 0.
double integrate_mminus_truncated(const StepWeight& w, const Rational& a, const Rational& b,
                                  double tol);

/// The Fujii-Wilson ratio for one pair: integrate_mminus_truncated / w(a,b).
double fujii_wilson_ratio(const StepWeight& w, const Rational& a, const Rational& b, double tol);

/// Lower bound for the Fujii-Wilson constant
/// [w]_{Ainfty+} = sup_{a<b} (1/w(a,b)) * integral over (a,b) of M-(w 1_(a,b)),
/// searched over breakpoint pairs plus refinement.  Always >= 1 (a pair
/// inside one constant piece realizes ratio 1 exactly).
ConstantEstimate fujii_wilson(const StepWeight& w, const SearchConfig& cfg);

}  // namespace sunrise
