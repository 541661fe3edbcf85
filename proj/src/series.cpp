#include "lfunc/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Ratio t_{k+1}/t_k of consecutive series terms.
Complex term_ratio(const SeriesSpec& spec, long k) {
  Complex r = spec.argument;
  const double kd = static_cast<double>(k);
  for (const Complex& a : spec.numerator_params) r *= a + kd;
  r /= kd + 1.0;
  for (const Complex& b : spec.denominator_params) r /= b + kd;
  return r;
}

std::optional<long> termination_order(const SeriesSpec& spec) {
  std::optional<long> n;
  for (const Complex& a : spec.numerator_params) {
    const double r = std::round(a.real());
    if (r <= 0.0 && std::abs(a - Complex(r, 0.0)) <= kTerminationSnapTol) {
      const long m = static_cast<long>(-r);
      if (!n || m < *n) n = m;
    }
  }
  return n;
}

// Exact sum of the n+1 terms of a series terminating at order n.
EvalResult sum_terminating(const SeriesSpec& spec, long n) {
  Complex term = 1.0, sum = 0.0;
  double abs_sum = 0.0;
  for (long k = 0; k <= n; ++k) {
    sum += term;
    abs_sum += std::abs(term);
    if (k < n) term *= term_ratio(spec, k);
  }
  return {sum, abs_sum * 1e-15, Method::direct, n + 1};
}

struct LevinEstimate {
  Complex value;
  double err;
  long work;
};

// Levin u-transform with omega_n = (beta+n) t_n, evaluated incrementally; the
// returned estimate is the plateau entry (smallest pair of consecutive
// corrections) before double-precision breakdown.
std::optional<LevinEstimate> levin_u(const SeriesSpec& spec, long max_terms) {
  constexpr double beta = 1.0;
  const long nmax = std::min<long>(max_terms, 48);
  if (nmax < 6) return std::nullopt;

  std::vector<Complex> numer(nmax), denom(nmax);
  Complex t = 1.0, s = 0.0;
  Complex prev_val = 0.0, prev2_val = 0.0;
  std::optional<LevinEstimate> best;
  double prev_diff = 0.0;
  for (long n = 0; n < nmax; ++n) {
    s += t;
    const Complex omega = (beta + n) * t;
    if (std::abs(omega) < 1e-300) break;  // terminating or underflow
    Complex term = 1.0 / (beta + n);
    denom[n] = term / omega;
    numer[n] = s * denom[n];
    if (n > 0) {
      const Complex ratio = (beta + n - 1.0) * term;
      for (long j = 1; j <= n; ++j) {
        const Complex fact = (n - j + beta) * term;
        denom[n - j] = denom[n - j + 1] - fact * denom[n - j];
        numer[n - j] = numer[n - j + 1] - fact * numer[n - j];
        term *= ratio;
      }
    }
    if (std::abs(denom[0]) > 1e-300) {
      const Complex val = numer[0] / denom[0];
      if (n >= 2) {
        const double diff = std::abs(val - prev_val);
        const double score = diff + prev_diff;
        if (n >= 5 && (!best || score < best->err))
          best = LevinEstimate{val, score, n + 1};
        prev_diff = diff;
      }
      prev2_val = prev_val;
      prev_val = val;
    }
    t *= term_ratio(spec, n);
  }
  (void)prev2_val;
  if (best) best->err = std::max(best->err * 2.0, 1e-15 * (1.0 + std::abs(best->value)));
  return best;
}

struct RichardsonEstimate {
  Complex value;
  double err;
  long work;
};

// Partial sums at doubling checkpoints, then elimination of the remainder
// powers N^{-s}, N^{-s-1}, ... where s is the parameter excess.
std::optional<RichardsonEstimate> richardson(const SeriesSpec& spec, Complex excess,
                                             long budget) {
  if (budget < 128) return std::nullopt;
  int K = 3;
  while (K < 6 && (budget >> K) >= 64) ++K;
  const long n0 = budget >> (K - 1);

  std::vector<Complex> S(K);
  Complex t = 1.0, acc = 0.0;
  double abs_acc = 0.0;
  long total = n0 << (K - 1);
  int next = 0;
  for (long k = 0; k < total; ++k) {
    acc += t;
    abs_acc += std::abs(t);
    if (k + 1 == (n0 << next)) {
      S[next] = acc;
      ++next;
    }
    if (k + 1 < total) t *= term_ratio(spec, k);
  }

  std::vector<std::vector<Complex>> R(K, std::vector<Complex>(K));
  for (int k = 0; k < K; ++k) R[k][0] = S[k];
  for (int j = 1; j < K; ++j) {
    const Complex w = std::exp(kLn2 * (excess + static_cast<double>(j - 1)));
    for (int k = j; k < K; ++k)
      R[k][j] = (w * R[k][j - 1] - R[k - 1][j - 1]) / (w - 1.0);
  }
  const Complex value = R[K - 1][K - 1];
  double err = std::abs(R[K - 1][K - 1] - R[K - 1][K - 2]);
  err = std::max(err, abs_acc * 5e-16);
  return RichardsonEstimate{value, err, total};
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::extrapolated: return "extrapolated";
    case Method::terminating_exact: return "terminating-exact";
    case Method::barnes: return "barnes";
  }
  return "unknown";
}

void SeriesSpec::validate() const {
  if (numerator_params.size() != denominator_params.size() + 1)
    throw SpecError("series: numerator count must be denominator count + 1");
  for (const Complex& z : {argument})
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw SpecError("series: non-finite argument");
  for (const Complex& b : denominator_params) {
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
      throw SpecError("series: non-finite denominator parameter");
    if (near_nonpositive_integer(b))
      throw SpecError("series: denominator parameter is a nonpositive integer");
  }
  for (const Complex& a : numerator_params)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw SpecError("series: non-finite numerator parameter");
}

Classification classify(const SeriesSpec& spec) {
  spec.validate();
  Classification c;
  if (auto n = termination_order(spec)) {
    c.terminating = true;
    c.termination_order = *n;
  }
  Complex num_sum = 0.0, den_sum = 0.0;
  for (const Complex& a : spec.numerator_params) num_sum += a;
  for (const Complex& b : spec.denominator_params) den_sum += b;
  c.excess = den_sum - num_sum;
  c.saalschutzian = std::abs(c.excess - 1.0) <= kClassifyTol;
  c.converges_at_unit = c.excess.real() > 0.0;

  const auto& a = spec.numerator_params;
  const auto& b = spec.denominator_params;
  const Complex poise = 1.0 + a[0];
  c.well_poised = true;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (std::abs(b[j] + a[j + 1] - poise) > kClassifyTol) c.well_poised = false;
  c.very_well_poised =
      c.well_poised && a.size() >= 2 && std::abs(a[1] - (1.0 + 0.5 * a[0])) <= kClassifyTol;
  return c;
}

EvalResult sum_direct(const SeriesSpec& spec, long max_terms, double target_abs) {
  spec.validate();
  if (auto n = termination_order(spec)) {
    if (*n + 1 > max_terms)
      throw NoConvergence("sum_direct: terminating series longer than max_terms");
    return sum_terminating(spec, *n);
  }

  Complex term = 1.0, partial = 0.0;
  double abs_sum = 0.0;
  int quiet = 0;
  double last_ratio = 0.0;
  for (long k = 0; k < max_terms; ++k) {
    partial += term;
    abs_sum += std::abs(term);
    const Complex r = term_ratio(spec, k);
    const Complex next = term * r;
    const double tmag = std::abs(next);
    if (tmag > 1e280) throw NoConvergence("sum_direct: terms grow without bound");
    last_ratio = std::abs(r);
    if (tmag < target_abs * std::max(1.0, std::abs(partial)) && last_ratio < 1.0)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) {
      // heuristic tail bound: geometric if the ratio is safely below 1,
      // otherwise the algebraic estimate |t_N| * N / Re(excess)
      double tail = tmag * static_cast<double>(k + 1);
      if (last_ratio < 0.9) tail = std::min(tail, tmag * last_ratio / (1.0 - last_ratio));
      const Classification c = classify(spec);
      if (c.excess.real() > 0.05 && std::abs(spec.argument - 1.0) < 1e-12)
        tail = std::min(tail, tmag * static_cast<double>(k + 1) / c.excess.real());
      const double err = tail + abs_sum * 1e-16;
      return {partial, err, Method::direct, k + 1};
    }
    term = next;
  }
  throw NoConvergence("sum_direct: max_terms reached before the stopping rule fired");
}

EvalResult sum_extrapolated(const SeriesSpec& spec, long budget) {
  spec.validate();
  if (auto n = termination_order(spec)) {
    if (*n + 1 > budget)
      throw NoConvergence("sum_extrapolated: terminating series longer than budget");
    return sum_terminating(spec, *n);
  }
  if (std::abs(spec.argument) < 1.0 - 1e-12) {
    // geometric decay: plain summation converges and needs no tail model
    return sum_direct(spec, budget, 1e-15);
  }
  if (std::abs(spec.argument) > 1.0 + 1e-12)
    throw NoConvergence("sum_extrapolated: |z| > 1 diverges");

  const Classification cls = classify(spec);
  if (cls.excess.real() <= 0.0)
    throw NoConvergence("sum_extrapolated: series diverges at unit argument");

  const auto levin = levin_u(spec, budget);
  if (levin && levin->err <= 1e-12 * std::max(1.0, std::abs(levin->value)))
    return {levin->value, levin->err, Method::extrapolated, levin->work};

  const auto rich = richardson(spec, cls.excess, budget);
  if (!rich && !levin)
    throw NoConvergence("sum_extrapolated: budget too small for extrapolation");

  Complex value;
  double err;
  long work;
  if (rich && levin) {
    const double gap = std::abs(rich->value - levin->value);
    if (gap <= 3.0 * (rich->err + levin->err) + 1e-13 * (1.0 + std::abs(rich->value))) {
      if (levin->err < rich->err) {
        value = levin->value, err = levin->err, work = levin->work;
      } else {
        value = rich->value, err = rich->err, work = rich->work;
      }
      work = rich->work + levin->work;
    } else {
      // estimates disagree: trust the checkpoint table, widen the error
      value = rich->value;
      err = gap + rich->err;
      work = rich->work + levin->work;
    }
  } else if (rich) {
    value = rich->value, err = rich->err, work = rich->work;
  } else {
    value = levin->value, err = levin->err, work = levin->work;
  }

  if (err > 1e-2 * (1.0 + std::abs(value)))
    throw NoConvergence("sum_extrapolated: extrapolation spread stagnated");
  return {value, err, Method::extrapolated, work};
}

}  // namespace lfunc
