#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace lfunc {

using Complex = std::complex<double>;

// Absolute distance to a nonpositive integer below which an argument is
// treated as sitting on a gamma pole.
inline constexpr double kPoleTol = 1e-12;

bool near_nonpositive_integer(Complex z, double tol = kPoleTol);

/// Principal branch of log Gamma on the plane cut along (-inf, 0].
/// Relative accuracy better than 1e-13 for |z| <= 100.
/// Throws PoleError if z is within kPoleTol of a nonpositive integer.
Complex log_gamma(Complex z);

/// 1/Gamma(z). Entire; returns exactly 0 when z is a nonpositive integer
/// within kPoleTol.
Complex reciprocal_gamma(Complex z);

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Complex pochhammer(Complex a, long n);

/// sin(pi z) without cancellation or spurious overflow for large |Im z|.
Complex sin_pi(Complex z);

/// 1/(Gamma(x1)...Gamma(xk)), assembled in log space and exponentiated once;
/// exactly 0 as soon as any argument sits on a pole of Gamma.
Complex reciprocal_gamma_product(std::initializer_list<Complex> args);
Complex reciprocal_gamma_product(const std::vector<Complex>& args);

}  // namespace lfunc
