#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace lfunc {

// Exact rationals, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Hypergeometric series with exact rational parameters, unit argument.
struct RationalSeriesSpec {
  std::vector<Rational> numerator_params;
  std::vector<Rational> denominator_params;
};

/// Exact value of a series terminating at order n (some numerator parameter
/// equals -n). Throws SpecError if no numerator parameter equals -n or a
/// denominator Pochhammer factor vanishes before the series terminates.
Rational sum_terminating_rational(const RationalSeriesSpec& spec, long n);

}  // namespace lfunc
