#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lfunc/errors.hpp"
#include "lfunc/verifier.hpp"

using lfunc::CheckRecord;
using lfunc::Complex;
using lfunc::Gen;
using lfunc::generator;
using lfunc::Group;
using lfunc::GroupElement;
using lfunc::make_point;
using lfunc::ParameterPoint;
using lfunc::Rational;
using lfunc::SampleConstraints;
using lfunc::sample_point;
using lfunc::VerificationReport;

TEST_CASE("constraints must have positive gaps") {
  SampleConstraints cs;
  cs.e_integer_gap = -1.0;
  CHECK_THROWS_AS(cs.validate(), lfunc::DomainError);
}

TEST_CASE("sample_point determinism and admissibility") {
  SampleConstraints cs;
  cs.seed = 1;
  const ParameterPoint p = sample_point(cs);
  CHECK_NOTHROW(make_point(p.coords()));

  const ParameterPoint q = sample_point(cs);
  for (int i = 0; i < 7; ++i) CHECK(p.coords()[i] == q.coords()[i]);

  cs.seed = 2;
  const ParameterPoint r = sample_point(cs);
  CHECK(p.coords()[0] != r.coords()[0]);
}

TEST_CASE("empty sampling region exhausts") {
  SampleConstraints cs;
  cs.magnitude_cap = 0.0;
  CHECK_THROWS_AS(sample_point(cs), lfunc::SamplerExhausted);
}

TEST_CASE("complex sampling stays admissible") {
  SampleConstraints cs;
  cs.seed = 5;
  cs.complex_parts = true;
  const ParameterPoint p = sample_point(cs);
  CHECK_NOTHROW(make_point(p.coords()));
  bool has_imag = false;
  for (const Complex& z : p.coords())
    if (z.imag() != 0.0) has_imag = true;
  CHECK(has_imag);
}

TEST_CASE("invariance under the identity is exact") {
  const Group& g = Group::instance();
  SampleConstraints cs;
  cs.seed = 3;
  const VerificationReport report =
      lfunc::verify_invariance({&g.identity()}, 2, 1e-6, cs);
  CHECK(report.all_pass());
  for (const CheckRecord& c : report.checks) CHECK(c.abs_diff == 0.0);
}

TEST_CASE("invariance under the fundamental relation") {
  static const GroupElement a = generator(Gen::A);
  SampleConstraints cs;
  cs.seed = 11;
  const VerificationReport report = lfunc::verify_invariance({&a}, 5, 1e-6, cs);
  CHECK(report.total() == 5);
  CHECK(report.all_pass());
}

TEST_CASE("eq530 numeric check and involution") {
  const CheckRecord rec = lfunc::verify_eq_530(0.2, 0.3, 0.4, 1.5, 1.9, 1e-6);
  CHECK(rec.pass);
  CHECK(rec.abs_diff <= 1e-6);
  // mpmath value of the left side at 40 digits
  CHECK(std::abs(rec.lhs - 0.8917696920083783375335487) < 1e-9);

  CHECK_THROWS_AS(lfunc::verify_eq_530(1.5, 0.3, 0.4, 1.5, 1.9, 1e-6),
                  lfunc::DomainError);

  const std::string twice =
      lfunc::compose(lfunc::eq530_substitution(), lfunc::eq530_substitution())
          .normalized();
  CHECK(twice == lfunc::identity_substitution().normalized());
}

TEST_CASE("thomae numeric check, fixed point and composition") {
  const CheckRecord rec = lfunc::verify_thomae(0.2, 0.3, 0.4, 1.5, 1.9, 1e-6);
  CHECK(rec.pass);

  // self-dual instance with dyadic values: c = f-b, d = g-b makes both sides
  // syntactically equal, and exact binary arithmetic keeps them bit-identical
  const double b = 0.5, f = 1.5, g = 2.0;
  const CheckRecord fixed = lfunc::verify_thomae(b, f - b, g - b, f, g, 1e-12);
  CHECK(fixed.pass);
  CHECK(fixed.abs_diff == 0.0);

  const std::string twice =
      lfunc::compose(lfunc::thomae_substitution(), lfunc::thomae_substitution())
          .normalized();
  CHECK(twice == lfunc::eq530_substitution().normalized());

  // numeric route equivalence: Thomae applied twice lands on the eq530 value
  const lfunc::Substitution5 sub = lfunc::thomae_substitution();
  const std::array<Complex, 5> base = {0.2, 0.3, 0.4, 1.5, 1.9};
  std::array<Complex, 5> once{};
  for (int i = 0; i < 5; ++i) {
    once[i] = static_cast<double>(sub.image[i].constant);
    for (int j = 0; j < 5; ++j)
      once[i] += static_cast<double>(sub.image[i].coeff[j]) * base[j];
  }
  const CheckRecord hop = lfunc::verify_thomae(once[0], once[1], once[2], once[3],
                                               once[4], 1e-6);
  CHECK(hop.pass);
  const CheckRecord direct = lfunc::verify_eq_530(base[0], base[1], base[2], base[3],
                                                  base[4], 1e-6);
  // lhs of the hopped check equals rhs of the original Thomae application
  CHECK(std::abs(hop.lhs - rec.rhs) <= 1e-9);
  CHECK(std::abs(hop.rhs - direct.rhs) <= 1e-6);
}

TEST_CASE("bailey identity is exact in rational arithmetic") {
  const CheckRecord n1 =
      lfunc::verify_bailey(1, Rational(1, 2), Rational(1, 3), Rational(1, 4),
                           Rational(2), Rational(3));
  CHECK(n1.pass);
  CHECK(n1.abs_diff == 0.0);

  // independent two-term oracle: 4F3(-1,b,c,d;e,f,g;1) = 1 - bcd/(efg)
  const Rational b(1, 2), c(1, 3), d(1, 4), f(2), g(3);
  const Rational e = Rational(1) - 1 - f - g + b + c + d;
  CHECK(e == Rational(-47, 12));
  const Rational lhs = lfunc::sum_terminating_rational(
      {{Rational(-1), b, c, d}, {e, f, g}}, 1);
  CHECK(lhs == 1 - (b * c * d) / (e * f * g));
  CHECK(lhs == Rational(565, 564));

  const CheckRecord n0 =
      lfunc::verify_bailey(0, Rational(1, 2), Rational(1, 3), Rational(1, 4),
                           Rational(2), Rational(3));
  CHECK(n0.pass);
  CHECK(n0.lhs == Complex(1.0));
  CHECK(n0.rhs == Complex(1.0));

  CHECK_THROWS_AS(lfunc::verify_bailey(13, Rational(1, 2), Rational(1, 3),
                                       Rational(1, 4), Rational(2), Rational(3)),
                  lfunc::DomainError);
}

TEST_CASE("bailey n=2 over random rational instances") {
  lfunc::SampleConstraints cs;
  cs.seed = 7;
  lfunc::ClassicalSuiteOptions opts;
  opts.bailey_instances = 100;
  opts.bailey_max_n = 2;
  const VerificationReport report =
      lfunc::run_classical_suite(lfunc::ClassicalCheck::bailey, cs, opts);
  CHECK(report.total() == 100);
  CHECK(report.all_pass());
}

TEST_CASE("representation consistency at the standard point") {
  const ParameterPoint p = make_point(0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.8);
  const VerificationReport report = lfunc::verify_representation_consistency(p, 1e-5);
  CHECK(report.total() == 3);  // series/barnes, series/7f6, barnes/7f6
  CHECK(report.all_pass());
}

TEST_CASE("representation consistency skips 7F6 when Re(f-d) <= 0") {
  const ParameterPoint p = make_point(0.1, 0.2, 0.3, 0.75, 0.5, 0.7, 1.15);
  const VerificationReport report = lfunc::verify_representation_consistency(p, 1e-5);
  CHECK(report.total() == 1);  // only series/barnes remains
  CHECK(report.all_pass());
}

TEST_CASE("classical suite runs green end to end") {
  SampleConstraints cs;
  cs.seed = 17;
  lfunc::ClassicalSuiteOptions opts;
  opts.instances = 3;
  opts.bailey_instances = 10;
  const VerificationReport report =
      lfunc::run_classical_suite(lfunc::ClassicalCheck::all, cs, opts);
  CHECK(report.all_pass());
  const std::string json = lfunc::report_to_json(report);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"passed\": " + std::to_string(report.total())) != std::string::npos);
}
