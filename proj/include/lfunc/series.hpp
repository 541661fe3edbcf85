#pragma once

#include <string>
#include <vector>

#include "lfunc/gamma.hpp"

namespace lfunc {

enum class Method { direct, extrapolated, terminating_exact, barnes };

std::string method_name(Method m);

struct EvalResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  Method method = Method::direct;
  long work = 0;  // terms summed or quadrature nodes
};

/// A generalized hypergeometric series p+1Fp(a1..a_{p+1}; b1..b_p; z).
struct SeriesSpec {
  std::vector<Complex> numerator_params;
  std::vector<Complex> denominator_params;
  Complex argument{1.0, 0.0};

  // Throws SpecError unless numerator count = denominator count + 1 and no
  // denominator parameter is a nonpositive integer (within kPoleTol).
  void validate() const;
};

struct Classification {
  bool terminating = false;
  long termination_order = -1;  // n such that -n occurs as a numerator parameter
  bool saalschutzian = false;
  bool well_poised = false;
  bool very_well_poised = false;
  bool converges_at_unit = false;
  Complex excess{};  // sum(denominator) - sum(numerator)
};

// Numerator parameters within this distance of a nonpositive integer are
// snapped to it for termination detection.
inline constexpr double kTerminationSnapTol = 1e-10;
inline constexpr double kClassifyTol = 1e-10;

Classification classify(const SeriesSpec& spec);

/// Plain partial summation. Stops once three consecutive terms fall below
/// target_abs * max(1, |partial|) while the term ratio stays below 1 in
/// magnitude. Throws NoConvergence if max_terms is exhausted first.
EvalResult sum_direct(const SeriesSpec& spec, long max_terms, double target_abs);

inline constexpr long kDefaultSeriesBudget = 20000;

/// Summation with Richardson extrapolation against the algebraic tail model
/// of a unit-argument series: partial-sum remainders behave like
/// N^{-s} (d0 + d1/N + d2/N^2 + ...) with s the parameter excess, so doubling
/// checkpoints eliminate successive powers exactly. Terminating input reduces
/// to sum_direct.
EvalResult sum_extrapolated(const SeriesSpec& spec, long budget = kDefaultSeriesBudget);

}  // namespace lfunc
