#include "lfunc/l_function.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

double integer_distance(Complex z) {
  return std::abs(z - Complex(std::round(z.real()), 0.0));
}

}  // namespace

ParameterPoint make_point(const std::array<Complex, 7>& x, double e_integer_gap) {
  return make_point(x[0], x[1], x[2], x[3], x[4], x[5], x[6], e_integer_gap);
}

ParameterPoint make_point(Complex a, Complex b, Complex c, Complex d, Complex e,
                          Complex f, Complex g, double e_integer_gap) {
  for (const Complex& z : {a, b, c, d, e, f, g})
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("make_point: non-finite coordinate");

  const Complex residual = e + f + g - a - b - c - d - 1.0;
  if (std::abs(residual) > kHyperplaneTol) {
    std::ostringstream msg;
    msg << "make_point: hyperplane constraint e+f+g-a-b-c-d = 1 violated, residual "
        << std::abs(residual);
    throw HyperplaneError(msg.str());
  }

  if (integer_distance(e) < e_integer_gap)
    throw DomainError("make_point: e within the exclusion gap of an integer (sin pi e vanishes)");

  const struct { const char* name; Complex value; } denominators[] = {
      {"e", e},         {"f", f},         {"g", g},
      {"1+f-e", 1.0 + f - e}, {"1+g-e", 1.0 + g - e}, {"2-e", 2.0 - e},
  };
  for (const auto& q : denominators) {
    const double r = std::round(q.value.real());
    if (r <= 0.0 && std::abs(q.value - Complex(r, 0.0)) <= 1e-10) {
      std::ostringstream msg;
      msg << "make_point: series denominator parameter " << q.name
          << " is a nonpositive integer";
      throw DomainError(msg.str());
    }
  }
  return ParameterPoint{a, b, c, d, e, f, g};
}

EvalResult eval_l_series(const ParameterPoint& p, long budget) {
  const auto& [a, b, c, d, e, f, g] = p;

  SeriesSpec first{{a, b, c, d}, {e, f, g}, 1.0};
  SeriesSpec second{{1.0 + a - e, 1.0 + b - e, 1.0 + c - e, 1.0 + d - e},
                    {1.0 + f - e, 1.0 + g - e, 2.0 - e},
                    1.0};
  const EvalResult f1 = sum_extrapolated(first, budget);
  const EvalResult f2 = sum_extrapolated(second, budget);

  const Complex sin_e = sin_pi(e);
  const Complex pref1 = reciprocal_gamma_product({e, f, g, 1.0 + a - e, 1.0 + b - e,
                                                  1.0 + c - e, 1.0 + d - e}) /
                        sin_e;
  const Complex pref2 = reciprocal_gamma_product({a, b, c, d, 1.0 + f - e,
                                                  1.0 + g - e, 2.0 - e}) /
                        sin_e;
  const Complex value = pref1 * f1.value - pref2 * f2.value;
  const double err = std::abs(pref1) * f1.abs_error_estimate +
                     std::abs(pref2) * f2.abs_error_estimate +
                     (std::abs(pref1 * f1.value) + std::abs(pref2 * f2.value)) * 1e-15;
  return {value, err, Method::extrapolated, f1.work + f2.work};
}

EvalResult eval_l_7f6(const ParameterPoint& p, long budget) {
  const auto& [a, b, c, d, e, f, g] = p;
  if ((f - d).real() <= 0.0)
    throw DomainError("eval_l_7f6: requires Re(f-d) > 0");

  const Complex w = d + g - e;
  SeriesSpec spec{{w, 1.0 + 0.5 * w, g - a, g - b, g - c, d, 1.0 + d - e},
                  {0.5 * w, 1.0 + a + d - e, 1.0 + b + d - e, 1.0 + c + d - e,
                   1.0 + g - e, g},
                  1.0};
  const EvalResult series = sum_extrapolated(spec, budget);

  const Complex pref = std::exp(log_gamma(1.0 + w)) *
                       reciprocal_gamma_product({g, 1.0 + g - e, f - d, 1.0 + a + d - e,
                                                 1.0 + b + d - e, 1.0 + c + d - e}) /
                       kPi;
  const Complex value = pref * series.value;
  const double err = std::abs(pref) * series.abs_error_estimate +
                     std::abs(value) * 1e-15;
  return {value, err, series.method, series.work};
}

BarnesIntegrand l_barnes_integrand(const ParameterPoint& p) {
  BarnesIntegrand ig;
  ig.plus_offsets = {{p.a, 1}, {p.b, 1}, {p.c, 1}, {p.d, 1}, {p.f, -1}, {p.g, -1}};
  ig.minus_offsets = {{1.0 - p.e, 1}, {Complex(0.0), 1}};
  return ig;
}

EvalResult eval_l_barnes(const ParameterPoint& p, double target_abs) {
  const auto& [a, b, c, d, e, f, g] = p;
  const BarnesIntegrand ig = l_barnes_integrand(p);
  const double abscissa = choose_contour(ig);

  const Complex pref = reciprocal_gamma_product({a, b, c, d, 1.0 + a - e, 1.0 + b - e,
                                                 1.0 + c - e, 1.0 + d - e}) /
                       kPi;
  // aim the absolute quadrature target at the final scale of L
  const double mag = std::abs(pref);
  const double integral_target =
      mag > 0.0 ? std::clamp(target_abs / mag, 1e-13, 1e-4) : 1e-10;
  const EvalResult integral = integrate(ig, abscissa, integral_target);

  const Complex value = pref * integral.value;
  const double err =
      mag * integral.abs_error_estimate + std::abs(value) * 1e-15;
  return {value, err, Method::barnes, integral.work};
}

EvalResult eval_l(const ParameterPoint& p, LMethod method) {
  switch (method) {
    case LMethod::series: return eval_l_series(p);
    case LMethod::f7f6: return eval_l_7f6(p);
    case LMethod::barnes: return eval_l_barnes(p);
    case LMethod::automatic: break;
  }
  if (contour_gap(l_barnes_integrand(p)).is_valid()) return eval_l_barnes(p);
  return eval_l_series(p);
}

}  // namespace lfunc
