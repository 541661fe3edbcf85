#pragma once

#include <array>

#include "lfunc/barnes.hpp"

namespace lfunc {

inline constexpr double kHyperplaneTol = 1e-10;
inline constexpr double kDefaultEIntegerGap = 1e-3;

/// Seven complex parameters on the hyperplane e+f+g-a-b-c-d = 1, away from
/// the singular sets of the defining series.
struct ParameterPoint {
  Complex a, b, c, d, e, f, g;

  std::array<Complex, 7> coords() const { return {a, b, c, d, e, f, g}; }
};

/// Validates and builds a point. Throws HyperplaneError when the constraint
/// residual exceeds kHyperplaneTol, DomainError when e sits within
/// e_integer_gap of an integer or a series denominator parameter
/// (e, f, g, 1+f-e, 1+g-e, 2-e) is a nonpositive integer.
ParameterPoint make_point(Complex a, Complex b, Complex c, Complex d, Complex e,
                          Complex f, Complex g,
                          double e_integer_gap = kDefaultEIntegerGap);
ParameterPoint make_point(const std::array<Complex, 7>& x,
                          double e_integer_gap = kDefaultEIntegerGap);

enum class LMethod { automatic, series, f7f6, barnes };

/// The defining linear combination of two Saalschutzian 4F3(1) series.
EvalResult eval_l_series(const ParameterPoint& p, long budget = kDefaultSeriesBudget);

/// The very-well-poised 7F6(1) form; requires Re(f-d) > 0.
EvalResult eval_l_7f6(const ParameterPoint& p, long budget = kDefaultSeriesBudget);

/// Barnes-integral form. Throws ContourError when no pole-separating vertical
/// line exists, i.e. unless max(-Re a,-Re b,-Re c,-Re d) < min(0, 1-Re e).
EvalResult eval_l_barnes(const ParameterPoint& p, double target_abs = 1e-12);

/// automatic prefers the exponentially convergent Barnes integral and falls
/// back to the series form when no contour exists.
EvalResult eval_l(const ParameterPoint& p, LMethod method = LMethod::automatic);

/// Integrand of the Barnes representation (exposed for contour diagnostics).
BarnesIntegrand l_barnes_integrand(const ParameterPoint& p);

}  // namespace lfunc
