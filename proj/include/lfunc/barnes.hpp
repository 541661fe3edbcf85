#pragma once

#include <vector>

#include "lfunc/series.hpp"

namespace lfunc {

struct GammaFactor {
  Complex offset;
  int exponent = +1;  // +1 for Gamma(arg), -1 for 1/Gamma(arg)
};

/// Product of gamma factors Gamma^{e_i}(a_i + t) * Gamma^{e_j}(b_j - t),
/// integrated along a vertical line that separates the two pole families.
struct BarnesIntegrand {
  std::vector<GammaFactor> plus_offsets;   // arguments a_i + t
  std::vector<GammaFactor> minus_offsets;  // arguments b_j - t

  // Throws SpecError when a_i + b_j is an integer (within 1e-10) for a pair of
  // exponent +1 factors: no straight separating contour can exist then.
  void validate() const;

  Complex value(Complex t) const;

  // pi/2 * (#exponent=+1 factors - #exponent=-1 factors): the exponential
  // decay rate of |value| in |Im t|.
  double decay_rate() const;
};

struct ContourGap {
  double lo = 0.0, hi = 0.0;  // pole-free band lo < Re t < hi
  bool is_valid() const { return lo < hi; }
  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
};

/// Pole-separating band for the exponent +1 factors. Unbounded sides are
/// clamped one unit away from the bounded side.
ContourGap contour_gap(const BarnesIntegrand& ig);

/// Midpoint of the gap; throws ContourError when the gap is empty.
double choose_contour(const BarnesIntegrand& ig);

inline constexpr long kDefaultNodeBudget = 200000;

/// (1/2*pi*i) * integral along Re t = abscissa, truncated at |Im t| = Y >=
/// min_height where the integrand bound falls below target_abs, and refined by
/// panel halving (32-node Gauss-Legendre per panel) until successive
/// estimates agree.
EvalResult integrate(const BarnesIntegrand& ig, double abscissa, double target_abs,
                     long node_budget = kDefaultNodeBudget, double min_height = 10.0);

struct LemmaReport {
  Complex lhs;     // integral side
  Complex rhs;     // closed form
  double abs_diff = 0.0;
};

/// First Barnes lemma: (1/2*pi*i) int Gamma(a+t)Gamma(b+t)Gamma(c-t)Gamma(d-t) dt
/// against Gamma(a+c)Gamma(a+d)Gamma(b+c)Gamma(b+d)/Gamma(a+b+c+d).
LemmaReport barnes_first_lemma_check(Complex alpha, Complex beta, Complex gamma,
                                     Complex delta);

/// Second Barnes lemma, requiring e+f-a-b-c = 1.
LemmaReport barnes_second_lemma_check(Complex a, Complex b, Complex c, Complex e,
                                      Complex f);

}  // namespace lfunc
