#include "lfunc/barnes.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPanelOrder = 32;

struct PanelRule {
  std::array<double, kPanelOrder> node;
  std::array<double, kPanelOrder> weight;
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_32.
PanelRule make_panel_rule() {
  PanelRule r{};
  const int n = kPanelOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.node[i] = -x;
    r.node[n - 1 - i] = x;
    r.weight[i] = r.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

const PanelRule& panel_rule() {
  static const PanelRule rule = make_panel_rule();
  return rule;
}

}  // namespace

void BarnesIntegrand::validate() const {
  if (plus_offsets.empty() && minus_offsets.empty())
    throw SpecError("barnes integrand: no gamma factors");
  // the left family Gamma(a+t) and right family Gamma(b-t) share a pole
  // exactly when a+b is a nonpositive integer; positive integer sums leave a
  // separating vertical line
  for (const GammaFactor& p : plus_offsets)
    for (const GammaFactor& m : minus_offsets) {
      if (p.exponent != 1 || m.exponent != 1) continue;
      const Complex s = p.offset + m.offset;
      if (std::abs(s.imag()) <= 1e-10 && s.real() <= 0.5 &&
          std::abs(s.real() - std::round(s.real())) <= 1e-10)
        throw SpecError("barnes integrand: a_i + b_j is a nonpositive integer, pole families collide");
    }
}

Complex BarnesIntegrand::value(Complex t) const {
  Complex log_acc = 0.0;
  for (const GammaFactor& p : plus_offsets) {
    const Complex arg = p.offset + t;
    if (p.exponent == 1) {
      log_acc += log_gamma(arg);
    } else {
      if (near_nonpositive_integer(arg)) return 0.0;
      log_acc -= log_gamma(arg);
    }
  }
  for (const GammaFactor& m : minus_offsets) {
    const Complex arg = m.offset - t;
    if (m.exponent == 1) {
      log_acc += log_gamma(arg);
    } else {
      if (near_nonpositive_integer(arg)) return 0.0;
      log_acc -= log_gamma(arg);
    }
  }
  return std::exp(log_acc);
}

double BarnesIntegrand::decay_rate() const {
  int up = 0, down = 0;
  for (const GammaFactor& p : plus_offsets) (p.exponent == 1 ? up : down)++;
  for (const GammaFactor& m : minus_offsets) (m.exponent == 1 ? up : down)++;
  return 0.5 * kPi * (up - down);
}

ContourGap contour_gap(const BarnesIntegrand& ig) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const GammaFactor& p : ig.plus_offsets)
    if (p.exponent == 1) lo = std::max(lo, -p.offset.real());
  for (const GammaFactor& m : ig.minus_offsets)
    if (m.exponent == 1) hi = std::min(hi, m.offset.real());
  if (!std::isfinite(lo)) lo = std::isfinite(hi) ? hi - 2.0 : -1.0;
  if (!std::isfinite(hi)) hi = lo + 2.0;
  return {lo, hi};
}

double choose_contour(const BarnesIntegrand& ig) {
  ig.validate();
  const ContourGap gap = contour_gap(ig);
  if (!gap.is_valid())
    throw ContourError("choose_contour: pole families leave no vertical gap");
  return gap.midpoint();
}

EvalResult integrate(const BarnesIntegrand& ig, double abscissa, double target_abs,
                     long node_budget, double min_height) {
  ig.validate();
  const ContourGap gap = contour_gap(ig);
  if (!gap.is_valid() || abscissa <= gap.lo || abscissa >= gap.hi)
    throw ContourError("integrate: abscissa outside the pole-separating gap");
  const double rate = ig.decay_rate();
  if (rate <= 0.0)
    throw SpecError("integrate: integrand does not decay along the contour");

  long nodes = 0;

  // truncation height: grow Y until the exponential envelope bound is small
  double Y = std::max(10.0, min_height);
  double tail = 0.0;
  for (;;) {
    const double gm = std::max(std::abs(ig.value(Complex(abscissa, Y))),
                               std::abs(ig.value(Complex(abscissa, -Y))));
    nodes += 2;
    tail = 2.0 * gm / rate;
    if (tail < 0.1 * target_abs || Y >= 400.0) break;
    Y *= 1.5;
  }
  if (tail >= 0.1 * target_abs && Y >= 400.0)
    throw QuadratureStall("integrate: truncation bound not reached by Y = 400");

  const PanelRule& rule = panel_rule();
  auto panel_sum = [&](long panels) {
    Complex total = 0.0;
    const double h = 2.0 * Y / static_cast<double>(panels);
    for (long i = 0; i < panels; ++i) {
      const double mid = -Y + (static_cast<double>(i) + 0.5) * h;
      Complex acc = 0.0;
      for (int q = 0; q < kPanelOrder; ++q)
        acc += rule.weight[q] * ig.value(Complex(abscissa, mid + 0.5 * h * rule.node[q]));
      total += 0.5 * h * acc;
    }
    nodes += panels * kPanelOrder;
    return total;
  };

  long panels = 8;
  Complex prev = panel_sum(panels);
  for (;;) {
    panels *= 2;
    if (nodes + panels * kPanelOrder > node_budget)
      throw QuadratureStall("integrate: node budget exhausted before convergence");
    const Complex cur = panel_sum(panels);
    const double diff = std::abs(cur - prev);
    if (diff < std::max(0.5 * target_abs, 5e-14 * std::abs(cur))) {
      const Complex value = cur / (2.0 * kPi);
      // floor at the accumulation roundoff over this many nodes
      const double err =
          std::max((diff + tail) / (2.0 * kPi), 5e-14 * std::abs(value));
      return {value, err, Method::barnes, nodes};
    }
    prev = cur;
  }
}

LemmaReport barnes_first_lemma_check(Complex alpha, Complex beta, Complex gamma,
                                     Complex delta) {
  const std::array<Complex, 4> pairings = {alpha + gamma, alpha + delta, beta + gamma,
                                           beta + delta};
  // a nonpositive integer pairing collides the pole families and puts the
  // closed form on a gamma pole; positive integer pairings are harmless
  for (const Complex& s : pairings)
    if (std::abs(s.imag()) <= 1e-10 && s.real() <= 0.5 &&
        std::abs(s.real() - std::round(s.real())) <= 1e-10)
      throw DomainError("barnes_first_lemma_check: a parameter pairing is a nonpositive integer");

  BarnesIntegrand ig;
  ig.plus_offsets = {{alpha, 1}, {beta, 1}};
  ig.minus_offsets = {{gamma, 1}, {delta, 1}};
  const EvalResult lhs = integrate(ig, choose_contour(ig), 1e-10);

  Complex log_rhs = 0.0;
  for (const Complex& s : pairings) log_rhs += log_gamma(s);
  const Complex rhs =
      std::exp(log_rhs) * reciprocal_gamma(alpha + beta + gamma + delta);
  return {lhs.value, rhs, std::abs(lhs.value - rhs)};
}

LemmaReport barnes_second_lemma_check(Complex a, Complex b, Complex c, Complex e,
                                      Complex f) {
  if (std::abs(e + f - a - b - c - 1.0) > 1e-10)
    throw DomainError("barnes_second_lemma_check: e+f-a-b-c = 1 violated");

  BarnesIntegrand ig;
  ig.plus_offsets = {{a, 1}, {b, 1}, {c, 1}, {f, -1}};
  ig.minus_offsets = {{1.0 - e, 1}, {Complex(0.0), 1}};
  const EvalResult lhs = integrate(ig, choose_contour(ig), 1e-10);

  Complex log_num = 0.0;
  for (const Complex& z : {a, b, c, 1.0 + a - e, 1.0 + b - e, 1.0 + c - e})
    log_num += log_gamma(z);
  Complex rhs = std::exp(log_num);
  for (const Complex& z : {f - a, f - b, f - c}) rhs *= reciprocal_gamma(z);
  return {lhs.value, rhs, std::abs(lhs.value - rhs)};
}

}  // namespace lfunc
