#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lfunc/errors.hpp"
#include "lfunc/series.hpp"

using lfunc::Classification;
using lfunc::classify;
using lfunc::Complex;
using lfunc::EvalResult;
using lfunc::Method;
using lfunc::SeriesSpec;
using lfunc::sum_direct;
using lfunc::sum_extrapolated;

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SeriesSpec({{1.0}, {1.0}, 1.0}).validate(), lfunc::SpecError);
  CHECK_THROWS_AS(SeriesSpec({{1.0, 1.0}, {0.0}, 1.0}).validate(), lfunc::SpecError);
  CHECK_THROWS_AS(SeriesSpec({{1.0, 1.0}, {-2.0}, 1.0}).validate(), lfunc::SpecError);
  CHECK_NOTHROW(SeriesSpec({{1.0, 1.0}, {0.5}, 1.0}).validate());
}

TEST_CASE("classification") {
  // Saalschutzian 4F3 on the hyperplane e+f+g-a-b-c-d = 1
  const SeriesSpec s{{0.1, 0.2, 0.3, 0.4}, {0.5, 0.7, 0.8}, 1.0};
  const Classification c = classify(s);
  CHECK(c.saalschutzian);
  CHECK(std::abs(c.excess - 1.0) < 1e-12);
  CHECK(c.converges_at_unit);
  CHECK_FALSE(c.terminating);

  const Classification t = classify({{-3.0, 1.0}, {2.0}, 1.0});
  CHECK(t.terminating);
  CHECK(t.termination_order == 3);

  // the very-well-poised 7F6 attached to the standard point
  const double a = 0.1, b = 0.2, cc = 0.3, d = 0.4, e = 0.5, g = 0.8;
  const double w = d + g - e;
  const SeriesSpec vwp{{w, 1.0 + 0.5 * w, g - a, g - b, g - cc, d, 1.0 + d - e},
                       {0.5 * w, 1.0 + a + d - e, 1.0 + b + d - e, 1.0 + cc + d - e,
                        1.0 + g - e, g},
                       1.0};
  const Classification v = classify(vwp);
  CHECK(v.well_poised);
  CHECK(v.very_well_poised);
}

TEST_CASE("classification is invariant under parameter permutations") {
  std::mt19937_64 rng(5);
  const SeriesSpec base{{0.3, -2.0, 1.7, 0.2}, {1.9, 0.4, 2.2}, 1.0};
  const Classification ref = classify(base);
  for (int i = 0; i < 20; ++i) {
    SeriesSpec s = base;
    std::shuffle(s.numerator_params.begin(), s.numerator_params.end(), rng);
    std::shuffle(s.denominator_params.begin(), s.denominator_params.end(), rng);
    const Classification c = classify(s);
    CHECK(c.terminating == ref.terminating);
    CHECK(c.saalschutzian == ref.saalschutzian);
    CHECK(c.converges_at_unit == ref.converges_at_unit);
    CHECK(std::abs(c.excess - ref.excess) < 1e-12);
  }
}

TEST_CASE("sum_direct on 2F1(1,2;4;1)") {
  // term_n = 6/((n+2)(n+3)) telescopes, so S_N = 3 - 6/(N+2)
  const EvalResult r = sum_direct({{1.0, 2.0}, {4.0}, 1.0}, 200000, 1e-8);
  const double oracle = 3.0 - 6.0 / (static_cast<double>(r.work) + 2.0);
  CHECK(std::abs(r.value - oracle) < 1e-10);
  CHECK(std::abs(r.value - 3.0) <= r.abs_error_estimate * 2.0 + 1e-12);
  CHECK(r.method == Method::direct);
}

TEST_CASE("sum_direct on the terminating binomial 1F0(-2;;1)") {
  const EvalResult r = sum_direct({{-2.0}, {}, 1.0}, 100, 1e-12);
  CHECK(r.value == Complex(0.0));
  CHECK(r.work == 3);
}

TEST_CASE("sum_direct refuses divergent unit-argument series") {
  CHECK_THROWS_AS(sum_direct({{1.0, 2.0}, {2.5}, 1.0}, 10000, 1e-10),
                  lfunc::NoConvergence);
}

TEST_CASE("direct and extrapolated sums agree on a convergent 3F2") {
  const SeriesSpec s{{0.2, 0.3, 0.4}, {1.5, 1.9}, 1.0};
  const EvalResult direct = sum_direct(s, 200000, 1e-9);
  const EvalResult extr = sum_extrapolated(s);
  CHECK(std::abs(direct.value - extr.value) < 1e-6);
  // reference computed with mpmath hyper at 40 digits
  CHECK(std::abs(extr.value - 1.010422928565218785832767) < 1e-11);
}

TEST_CASE("sum_extrapolated reaches 1e-10 on 2F1(1,2;4;1) within 200 terms") {
  const EvalResult r = sum_extrapolated({{1.0, 2.0}, {4.0}, 1.0}, 200);
  CHECK(r.work <= 200);
  CHECK(std::abs(r.value - 3.0) < 1e-10);
  CHECK(r.method == Method::extrapolated);
}

TEST_CASE("sum_extrapolated on the standard Saalschutzian 4F3") {
  const EvalResult r = sum_extrapolated({{0.1, 0.2, 0.3, 0.4}, {0.5, 0.7, 0.8}, 1.0});
  // reference computed with mpmath hyper at 40 digits
  CHECK(std::abs(r.value - 1.014429210531608520512591) < 1e-10);
  CHECK(r.abs_error_estimate < 1e-8);
}

TEST_CASE("terminating input reduces to the direct sum") {
  const SeriesSpec s{{-3.0, 1.5}, {2.5}, 1.0};
  const EvalResult d = sum_direct(s, 100, 1e-12);
  const EvalResult e = sum_extrapolated(s);
  CHECK(d.value == e.value);
  CHECK(e.method == Method::direct);
  CHECK(e.work == 4);
}

TEST_CASE("extrapolation rejects divergent input") {
  CHECK_THROWS_AS(sum_extrapolated({{1.0, 1.2, 0.8}, {0.9, 1.0}, 1.0}),
                  lfunc::NoConvergence);
}

TEST_CASE("partial-sum error shrinks monotonically past the monotone tail") {
  std::mt19937_64 rng(99);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 5; ++trial) {
    const double b1 = uniform(1.2, 2.2), b2 = uniform(1.2, 2.2);
    const SeriesSpec s{{uniform(0.1, 0.6), uniform(0.1, 0.6), uniform(0.1, 0.6)},
                       {b1, b2 + 1.5},
                       1.0};
    const Complex value = sum_extrapolated(s).value;

    Complex term = 1.0, partial = 0.0;
    double prev_err = -1.0, prev_mag = 1e300;
    bool decreasing = false;
    for (long k = 0; k < 300; ++k) {
      partial += term;
      const double mag = std::abs(term);
      if (!decreasing && k > 2 && mag < prev_mag) decreasing = true;
      if (decreasing) {
        const double err = std::abs(partial - value);
        // stop comparing once the error reaches the oracle's own resolution
        if (prev_err >= 0.0 && prev_err > 1e-9) CHECK(err <= prev_err + 1e-14);
        prev_err = err;
      }
      prev_mag = mag;
      Complex r = 1.0;
      const double kd = static_cast<double>(k);
      for (const Complex& a : s.numerator_params) r *= a + kd;
      r /= kd + 1.0;
      for (const Complex& b : s.denominator_params) r /= b + kd;
      term *= r;
    }
  }
}
