#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lfunc/catalog.hpp"
#include "lfunc/l_function.hpp"
#include "lfunc/rational_series.hpp"

namespace lfunc {

struct SampleConstraints {
  double e_integer_gap = 1e-3;
  double contour_gap_min = 0.05;
  double convergence_margin = 1.5;  // min Re-excess for the 3F2 identity checks
  double magnitude_cap = 2.0;
  std::uint64_t seed = 0;
  bool complex_parts = false;

  void validate() const;  // throws DomainError unless all gaps are positive
};

struct CheckRecord {
  std::string name;
  std::vector<Complex> point;  // parameters the check ran at
  Complex lhs{};
  Complex rhs{};
  double abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;  // failure reason when an evaluation error was recorded
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  long total() const { return static_cast<long>(checks.size()); }
  long passed() const;
  long failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }
  void append(const VerificationReport& other);
};

std::string report_to_json(const VerificationReport& report);

/// Deterministic rejection sampler on the hyperplane: six coordinates drawn,
/// the seventh solved. A draw is accepted only when the point and every
/// transform by the supplied elements pass make_point and keep a contour gap
/// of at least contour_gap_min. Throws SamplerExhausted after 1e5 rejections.
class PointSampler {
 public:
  explicit PointSampler(const SampleConstraints& constraints);
  ParameterPoint next(const std::vector<const GroupElement*>& orbit_elements = {});

 private:
  double uniform(double lo, double hi);
  SampleConstraints cs_;
  std::mt19937_64 rng_;
};

/// One-shot convenience wrapper around PointSampler.
ParameterPoint sample_point(const SampleConstraints& constraints,
                            const std::vector<const GroupElement*>& elements = {});

/// Compares eval_l(p) with eval_l(M p) for sampled points p and every element
/// M under test. Evaluation errors are recorded as failures, never thrown.
VerificationReport verify_invariance(const std::vector<const GroupElement*>& elements,
                                     int n_points, double tol,
                                     const SampleConstraints& constraints);

/// The 3F2(1) relation obtained from the |a| -> infinity limit; requires
/// Re(f+g-b-c-d) > 0 and Re(f-b) > 0.
CheckRecord verify_eq_530(Complex b, Complex c, Complex d, Complex f, Complex g,
                          double tol);

/// Thomae's identity for 3F2(1); requires both series to converge.
CheckRecord verify_thomae(Complex b, Complex c, Complex d, Complex f, Complex g,
                          double tol);

/// Bailey's identity for terminating Saalschutzian 4F3(1), exact rational
/// arithmetic on both sides; e is solved from e+f+g-b-c-d+n = 1.
CheckRecord verify_bailey(int n, const Rational& b, const Rational& c,
                          const Rational& d, const Rational& f, const Rational& g);

/// Pairwise comparison of the series, Barnes and (when Re(f-d) > 0) 7F6
/// evaluations at p.
VerificationReport verify_representation_consistency(const ParameterPoint& p,
                                                     double tol);

// --- symbolic parameter substitutions on (b,c,d;f,g) -----------------------

/// Integer-affine form over the variables b,c,d,f,g.
struct Affine5 {
  long constant = 0;
  std::array<long, 5> coeff{};  // order b,c,d,f,g
  std::string str() const;
};

/// Images of (b,c,d;f,g) under a two-term 3F2 relation.
struct Substitution5 {
  std::array<Affine5, 5> image;  // images of b,c,d,f,g

  /// Normalized display: numerator forms sorted, then denominator forms
  /// sorted, e.g. "[b,g-c,g-d;f+g-c-d,g]".
  std::string normalized() const;
};

Substitution5 identity_substitution();
Substitution5 eq530_substitution();
Substitution5 thomae_substitution();

/// outer(inner(x)): substitutes inner's forms into outer's variables.
Substitution5 compose(const Substitution5& outer, const Substitution5& inner);

// --- suite drivers ----------------------------------------------------------

enum class ClassicalCheck { thomae, bailey, barnes1, barnes2, eq530, all };

struct ClassicalSuiteOptions {
  int instances = 10;
  int bailey_instances = 100;
  int bailey_max_n = 6;
  double series_tol = 1e-6;      // checks involving accelerated summation
  double quadrature_tol = 1e-8;  // pure-quadrature comparisons
};

VerificationReport run_classical_suite(ClassicalCheck which,
                                       const SampleConstraints& constraints,
                                       const ClassicalSuiteOptions& options = {});

}  // namespace lfunc
