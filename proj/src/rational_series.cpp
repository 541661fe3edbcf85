#include "lfunc/rational_series.hpp"

#include <algorithm>

#include "lfunc/errors.hpp"

namespace lfunc {

Rational sum_terminating_rational(const RationalSeriesSpec& spec, long n) {
  if (n < 0) throw SpecError("sum_terminating_rational: negative order");
  if (spec.numerator_params.size() != spec.denominator_params.size() + 1)
    throw SpecError("sum_terminating_rational: numerator count must be denominator count + 1");
  const Rational minus_n(-n);
  if (std::none_of(spec.numerator_params.begin(), spec.numerator_params.end(),
                   [&](const Rational& a) { return a == minus_n; }))
    throw SpecError("sum_terminating_rational: no numerator parameter equals -n");
  for (const Rational& b : spec.denominator_params) {
    if (b <= 0 && b > minus_n && denominator(b) == 1)
      throw SpecError("sum_terminating_rational: denominator Pochhammer factor vanishes");
  }

  Rational term = 1, sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += term;
    if (k == n) break;
    Rational r = 1;
    for (const Rational& a : spec.numerator_params) r *= a + k;
    r /= k + 1;
    for (const Rational& b : spec.denominator_params) r /= b + k;
    term *= r;
  }
  return sum;
}

}  // namespace lfunc
