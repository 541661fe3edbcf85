#include "lfunc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

constexpr long kMaxRejections = 100000;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string complex_json(Complex z) {
  return "{\"re\": " + fmt17(z.real()) + ", \"im\": " + fmt17(z.imag()) + "}";
}

bool point_admissible(const std::array<Complex, 7>& x, const SampleConstraints& cs) {
  try {
    make_point(x, cs.e_integer_gap);
  } catch (const Error&) {
    return false;
  }
  BarnesIntegrand ig;
  ig.plus_offsets = {{x[0], 1}, {x[1], 1}, {x[2], 1}, {x[3], 1}, {x[5], -1}, {x[6], -1}};
  ig.minus_offsets = {{1.0 - x[4], 1}, {Complex(0.0), 1}};
  const ContourGap gap = contour_gap(ig);
  return gap.is_valid() && gap.width() >= cs.contour_gap_min;
}

CheckRecord error_record(std::string name, std::vector<Complex> point, double tol,
                         const char* what) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.point = std::move(point);
  rec.abs_diff = std::numeric_limits<double>::infinity();
  rec.tol = tol;
  rec.pass = false;
  rec.note = what;
  return rec;
}

Rational rational_pochhammer(const Rational& a, int n) {
  Rational p = 1;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

bool vanishing_denominator(const Rational& b, int n) {
  // b in {0, -1, ..., -(n-1)}
  return denominator(b) == 1 && b <= 0 && b > Rational(-n);
}

Complex rational_to_complex(const Rational& r) {
  return Complex(numerator(r).convert_to<double>() / denominator(r).convert_to<double>(),
                 0.0);
}

// canonical parameter order; makes syntactically identical instances of the
// two-term relations evaluate bit-identically
std::vector<Complex> sorted_params(std::initializer_list<Complex> v) {
  std::vector<Complex> out(v);
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

}  // namespace

void SampleConstraints::validate() const {
  if (e_integer_gap <= 0.0 || contour_gap_min <= 0.0 || convergence_margin <= 0.0)
    throw DomainError("SampleConstraints: all gaps must be positive");
}

long VerificationReport::passed() const {
  return static_cast<long>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string report_to_json(const VerificationReport& report) {
  std::ostringstream out;
  out << "{\n  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckRecord& c = report.checks[i];
    out << "    {\"name\": \"" << json_escape(c.name) << "\", \"point\": [";
    for (std::size_t j = 0; j < c.point.size(); ++j)
      out << (j ? ", " : "") << complex_json(c.point[j]);
    out << "], \"lhs\": " << complex_json(c.lhs) << ", \"rhs\": " << complex_json(c.rhs)
        << ", \"abs_diff\": " << fmt17(c.abs_diff) << ", \"tol\": " << fmt17(c.tol)
        << ", \"pass\": " << (c.pass ? "true" : "false");
    if (!c.note.empty()) out << ", \"note\": \"" << json_escape(c.note) << "\"";
    out << "}" << (i + 1 < report.checks.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"summary\": {\"total\": " << report.total()
      << ", \"passed\": " << report.passed() << ", \"failed\": " << report.failed()
      << "}\n}\n";
  return out.str();
}

PointSampler::PointSampler(const SampleConstraints& constraints)
    : cs_(constraints), rng_(constraints.seed) {
  cs_.validate();
}

double PointSampler::uniform(double lo, double hi) {
  // 53-bit mantissa draw; identical sequences on every platform
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ParameterPoint PointSampler::next(const std::vector<const GroupElement*>& orbit_elements) {
  for (long attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::array<Complex, 7> x{};
    for (int i = 0; i < 4; ++i) x[i] = uniform(0.05, 0.45);
    x[4] = uniform(0.35, 0.65);
    x[5] = uniform(0.55, 0.85);
    if (cs_.complex_parts)
      for (int i = 0; i < 6; ++i) x[i] += Complex(0.0, uniform(-0.15, 0.15));
    x[6] = 1.0 + x[0] + x[1] + x[2] + x[3] - x[4] - x[5];

    const bool capped = std::any_of(x.begin(), x.end(), [&](Complex z) {
      return std::abs(z) > cs_.magnitude_cap;
    });
    if (capped) continue;
    if (!point_admissible(x, cs_)) continue;

    bool orbit_ok = true;
    for (const GroupElement* m : orbit_elements) {
      if (!point_admissible(lfunc::apply(*m, x), cs_)) {
        orbit_ok = false;
        break;
      }
    }
    if (!orbit_ok) continue;
    return make_point(x, cs_.e_integer_gap);
  }
  throw SamplerExhausted("sample_point: no admissible point within the rejection budget");
}

ParameterPoint sample_point(const SampleConstraints& constraints,
                            const std::vector<const GroupElement*>& elements) {
  return PointSampler(constraints).next(elements);
}

VerificationReport verify_invariance(const std::vector<const GroupElement*>& elements,
                                     int n_points, double tol,
                                     const SampleConstraints& constraints) {
  VerificationReport report;
  PointSampler sampler(constraints);
  for (int i = 0; i < n_points; ++i) {
    ParameterPoint p = sampler.next(elements);
    const std::array<Complex, 7> xs = p.coords();
    const std::vector<Complex> base(xs.begin(), xs.end());

    EvalResult lp;
    try {
      lp = eval_l(p);
    } catch (const Error& err) {
      for (const GroupElement* m : elements)
        report.checks.push_back(error_record(
            "invariance point=" + std::to_string(i) + " word=" + m->word_string(), base,
            tol, err.what()));
      continue;
    }

    for (const GroupElement* m : elements) {
      const std::string name =
          "invariance point=" + std::to_string(i) + " word=" + m->word_string();
      CheckRecord rec;
      rec.name = name;
      rec.point = base;
      rec.tol = tol * (1.0 + std::abs(lp.value));
      try {
        const ParameterPoint q = make_point(lfunc::apply(*m, p.coords()), constraints.e_integer_gap);
        const EvalResult lq = eval_l(q);
        rec.lhs = lp.value;
        rec.rhs = lq.value;
        rec.abs_diff = std::abs(lp.value - lq.value);
        rec.pass = rec.abs_diff <= rec.tol;
      } catch (const Error& err) {
        rec.abs_diff = std::numeric_limits<double>::infinity();
        rec.pass = false;
        rec.note = err.what();
      }
      report.checks.push_back(std::move(rec));
    }
  }
  return report;
}

CheckRecord verify_eq_530(Complex b, Complex c, Complex d, Complex f, Complex g,
                          double tol) {
  if ((f + g - b - c - d).real() <= 0.0 || (f - b).real() <= 0.0)
    throw DomainError("verify_eq_530: requires Re(f+g-b-c-d) > 0 and Re(f-b) > 0");

  CheckRecord rec;
  rec.name = "eq530";
  rec.point = {b, c, d, f, g};
  rec.tol = tol;
  try {
    const EvalResult lhs_series =
        sum_extrapolated(SeriesSpec{sorted_params({b, c, d}), sorted_params({f, g}), 1.0});
    rec.lhs = lhs_series.value *
              reciprocal_gamma_product(sorted_params({f, g, f + g - b - c - d}));
    const EvalResult rhs_series = sum_extrapolated(SeriesSpec{
        sorted_params({b, g - c, g - d}), sorted_params({f + g - c - d, g}), 1.0});
    rec.rhs = rhs_series.value *
              reciprocal_gamma_product(sorted_params({f + g - c - d, g, f - b}));
    rec.abs_diff = std::abs(rec.lhs - rec.rhs);
    rec.pass = rec.abs_diff <= rec.tol;
  } catch (const Error& err) {
    rec.abs_diff = std::numeric_limits<double>::infinity();
    rec.pass = false;
    rec.note = err.what();
  }
  return rec;
}

CheckRecord verify_thomae(Complex b, Complex c, Complex d, Complex f, Complex g,
                          double tol) {
  if ((f + g - b - c - d).real() <= 0.0 || b.real() <= 0.0)
    throw DomainError("verify_thomae: both 3F2(1) series must converge");

  CheckRecord rec;
  rec.name = "thomae";
  rec.point = {b, c, d, f, g};
  rec.tol = tol;
  try {
    const EvalResult lhs_series =
        sum_extrapolated(SeriesSpec{sorted_params({b, c, d}), sorted_params({f, g}), 1.0});
    rec.lhs = lhs_series.value *
              reciprocal_gamma_product(sorted_params({f, g, f + g - b - c - d}));
    const EvalResult rhs_series =
        sum_extrapolated(SeriesSpec{sorted_params({f - b, g - b, f + g - b - c - d}),
                                    sorted_params({f + g - b - d, f + g - b - c}), 1.0});
    rec.rhs = rhs_series.value *
              reciprocal_gamma_product(sorted_params({b, f + g - b - d, f + g - b - c}));
    rec.abs_diff = std::abs(rec.lhs - rec.rhs);
    rec.pass = rec.abs_diff <= rec.tol;
  } catch (const Error& err) {
    rec.abs_diff = std::numeric_limits<double>::infinity();
    rec.pass = false;
    rec.note = err.what();
  }
  return rec;
}

CheckRecord verify_bailey(int n, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& f, const Rational& g) {
  if (n < 0 || n > 12) throw DomainError("verify_bailey: n must lie in 0..12");
  const Rational e = Rational(1) - n - f - g + b + c + d;

  for (const Rational& q : {e, f, g})
    if (vanishing_denominator(q, n))
      throw DomainError("verify_bailey: left 4F3 denominator parameter vanishes");
  const Rational rb_f = Rational(1) - n + b - f;
  const Rational rb_e = Rational(1) - n + b - e;
  for (const Rational& q : {rb_f, rb_e, g})
    if (vanishing_denominator(q, n))
      throw DomainError("verify_bailey: right 4F3 denominator parameter vanishes");

  CheckRecord rec;
  rec.name = "bailey n=" + std::to_string(n);
  for (const Rational& q : {b, c, d, f, g}) rec.point.push_back(rational_to_complex(q));
  rec.tol = 0.0;

  const Rational lhs =
      sum_terminating_rational({{Rational(-n), b, c, d}, {e, f, g}}, n);
  const Rational pref = rational_pochhammer(e - b, n) * rational_pochhammer(f - b, n) /
                        (rational_pochhammer(e, n) * rational_pochhammer(f, n));
  const Rational rhs =
      pref * sum_terminating_rational({{Rational(-n), b, g - c, g - d}, {rb_f, rb_e, g}}, n);

  rec.lhs = rational_to_complex(lhs);
  rec.rhs = rational_to_complex(rhs);
  rec.pass = lhs == rhs;
  rec.abs_diff = rec.pass ? 0.0 : std::abs(rational_to_complex(lhs - rhs));
  if (!rec.pass) rec.note = "exact rational mismatch";
  return rec;
}

VerificationReport verify_representation_consistency(const ParameterPoint& p, double tol) {
  struct Candidate {
    const char* name = "";
    bool available = false;
    EvalResult result;
    std::string error;
  };
  std::array<Candidate, 3> methods{};
  methods[0].name = "series";
  methods[1].name = "barnes";
  methods[2].name = "7f6";

  try {
    methods[0].result = eval_l_series(p);
    methods[0].available = true;
  } catch (const Error& err) {
    methods[0].error = err.what();
  }
  try {
    methods[1].result = eval_l_barnes(p);
    methods[1].available = true;
  } catch (const Error& err) {
    methods[1].error = err.what();
  }
  if ((p.f - p.d).real() > 0.0) {
    try {
      methods[2].result = eval_l_7f6(p);
      methods[2].available = true;
    } catch (const Error& err) {
      methods[2].error = err.what();
    }
  } else {
    methods[2].error = "skipped: Re(f-d) <= 0";
  }

  VerificationReport report;
  const std::array<Complex, 7> xs = p.coords();
  const std::vector<Complex> base(xs.begin(), xs.end());
  for (std::size_t i = 0; i < methods.size(); ++i)
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      CheckRecord rec;
      rec.name = std::string("consistency ") + methods[i].name + "/" + methods[j].name;
      rec.point = base;
      rec.tol = tol;
      if (!methods[i].available || !methods[j].available) {
        const Candidate& bad = methods[i].available ? methods[j] : methods[i];
        if (bad.error.rfind("skipped", 0) == 0) continue;  // not applicable, not a failure
        rec.abs_diff = std::numeric_limits<double>::infinity();
        rec.pass = false;
        rec.note = bad.error;
      } else {
        rec.lhs = methods[i].result.value;
        rec.rhs = methods[j].result.value;
        rec.abs_diff = std::abs(rec.lhs - rec.rhs);
        rec.pass = rec.abs_diff <= rec.tol;
      }
      report.checks.push_back(std::move(rec));
    }
  return report;
}

// --- symbolic substitutions -------------------------------------------------

namespace {
constexpr char kVars5[5] = {'b', 'c', 'd', 'f', 'g'};
}

std::string Affine5::str() const {
  std::string out;
  if (constant != 0) out = std::to_string(constant);
  for (int sign = +1; sign >= -1; sign -= 2) {
    for (int i = 0; i < 5; ++i) {
      const long c = coeff[i];
      if (c == 0 || (sign > 0) != (c > 0)) continue;
      if (sign > 0 && !out.empty()) out += '+';
      if (sign < 0) out += '-';
      if (std::abs(c) != 1) out += std::to_string(std::abs(c));
      out += kVars5[i];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::string Substitution5::normalized() const {
  std::array<std::string, 3> num = {image[0].str(), image[1].str(), image[2].str()};
  std::array<std::string, 2> den = {image[3].str(), image[4].str()};
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  return "[" + num[0] + "," + num[1] + "," + num[2] + ";" + den[0] + "," + den[1] + "]";
}

Substitution5 identity_substitution() {
  Substitution5 s;
  for (int i = 0; i < 5; ++i) s.image[i].coeff[i] = 1;
  return s;
}

Substitution5 eq530_substitution() {
  // (b, c, d; f, g) -> (b, g-c, g-d; f+g-c-d, g)
  Substitution5 s = identity_substitution();
  s.image[1] = Affine5{0, {0, -1, 0, 0, 1}};
  s.image[2] = Affine5{0, {0, 0, -1, 0, 1}};
  s.image[3] = Affine5{0, {0, -1, -1, 1, 1}};
  s.image[4] = Affine5{0, {0, 0, 0, 0, 1}};
  return s;
}

Substitution5 thomae_substitution() {
  // (b, c, d; f, g) -> (f-b, g-b, f+g-b-c-d; f+g-b-d, f+g-b-c)
  Substitution5 s;
  s.image[0] = Affine5{0, {-1, 0, 0, 1, 0}};
  s.image[1] = Affine5{0, {-1, 0, 0, 0, 1}};
  s.image[2] = Affine5{0, {-1, -1, -1, 1, 1}};
  s.image[3] = Affine5{0, {-1, 0, -1, 1, 1}};
  s.image[4] = Affine5{0, {-1, -1, 0, 1, 1}};
  return s;
}

Substitution5 compose(const Substitution5& outer, const Substitution5& inner) {
  Substitution5 out;
  for (int i = 0; i < 5; ++i) {
    Affine5 acc;
    acc.constant = outer.image[i].constant;
    for (int j = 0; j < 5; ++j) {
      const long c = outer.image[i].coeff[j];
      if (c == 0) continue;
      acc.constant += c * inner.image[j].constant;
      for (int l = 0; l < 5; ++l) acc.coeff[l] += c * inner.image[j].coeff[l];
    }
    out.image[i] = acc;
  }
  return out;
}

// --- classical suite ---------------------------------------------------------

namespace {

class SuiteSampler {
 public:
  explicit SuiteSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  long uniform_int(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational small_rational() {
    // p/q with q in 2..7 and p chosen nonzero; avoids integers by construction
    const long q = uniform_int(2, 7);
    long p = uniform_int(1, 3 * q);
    if (p % q == 0) ++p;
    return Rational(p, q);
  }

 private:
  std::mt19937_64 rng_;
};

VerificationReport classical_eq530(SuiteSampler& rng, int instances, double tol,
                                   double margin) {
  VerificationReport report;
  for (int i = 0; i < instances; ++i) {
    const Complex b = rng.uniform(0.2, 0.5), c = rng.uniform(0.1, 0.5),
                  d = rng.uniform(0.1, 0.5);
    const Complex f = b + margin + rng.uniform(0.0, 0.9);  // Re(f-b) >= margin
    const Complex g = b + c + d - f + margin + rng.uniform(0.0, 1.5) + 1.0;
    CheckRecord rec = verify_eq_530(b, c, d, f, g, tol);
    rec.name += " #" + std::to_string(i);
    report.checks.push_back(std::move(rec));
  }
  // structural involution: applying the substitution twice is the identity
  CheckRecord inv;
  inv.name = "eq530 involution";
  const std::string twice = compose(eq530_substitution(), eq530_substitution()).normalized();
  const std::string id = identity_substitution().normalized();
  inv.pass = twice == id;
  inv.abs_diff = inv.pass ? 0.0 : 1.0;
  inv.note = twice + " vs " + id;
  report.checks.push_back(std::move(inv));
  return report;
}

VerificationReport classical_thomae(SuiteSampler& rng, int instances, double tol,
                                    double margin) {
  VerificationReport report;
  for (int i = 0; i < instances; ++i) {
    const Complex b = margin + rng.uniform(0.0, 0.4);  // RHS excess = b >= margin
    const Complex c = rng.uniform(0.1, 0.5), d = rng.uniform(0.1, 0.5);
    const Complex f = rng.uniform(0.3, 1.2) + 1.0;
    const Complex g = b + c + d - f + margin + rng.uniform(0.0, 1.5) + 1.0;
    CheckRecord rec = verify_thomae(b, c, d, f, g, tol);
    rec.name += " #" + std::to_string(i);
    report.checks.push_back(std::move(rec));
  }
  // applying Thomae twice must give the Eq. 530 substitution
  CheckRecord comp;
  comp.name = "thomae composition";
  const std::string twice = compose(thomae_substitution(), thomae_substitution()).normalized();
  const std::string eq530 = eq530_substitution().normalized();
  comp.pass = twice == eq530;
  comp.abs_diff = comp.pass ? 0.0 : 1.0;
  comp.note = twice + " vs " + eq530;
  report.checks.push_back(std::move(comp));
  return report;
}

VerificationReport classical_bailey(SuiteSampler& rng, int instances, int max_n) {
  VerificationReport report;
  int produced = 0;
  long guard = 0;
  while (produced < instances && guard++ < 100 * instances) {
    const int n = static_cast<int>(rng.uniform_int(0, max_n));
    const Rational b = rng.small_rational(), c = rng.small_rational(),
                   d = rng.small_rational(), f = rng.small_rational(),
                   g = rng.small_rational();
    try {
      CheckRecord rec = verify_bailey(n, b, c, d, f, g);
      rec.name += " #" + std::to_string(produced);
      report.checks.push_back(std::move(rec));
      ++produced;
    } catch (const DomainError&) {
      // inadmissible denominators; redraw
    }
  }
  return report;
}

VerificationReport classical_barnes1(SuiteSampler& rng, int instances, double tol) {
  VerificationReport report;
  int produced = 0;
  while (produced < instances) {
    const Complex al = rng.uniform(0.1, 0.9), be = rng.uniform(0.1, 0.9),
                  ga = rng.uniform(0.1, 0.9), de = rng.uniform(0.1, 0.9);
    const double worst = std::min(
        {std::abs(std::round((al + ga).real()) - (al + ga).real()),
         std::abs(std::round((al + de).real()) - (al + de).real()),
         std::abs(std::round((be + ga).real()) - (be + ga).real()),
         std::abs(std::round((be + de).real()) - (be + de).real())});
    if (worst < 0.05) continue;  // keep the closed form well conditioned
    CheckRecord rec;
    rec.name = "barnes1 #" + std::to_string(produced);
    rec.point = {al, be, ga, de};
    rec.tol = tol;
    try {
      const LemmaReport lr = barnes_first_lemma_check(al, be, ga, de);
      rec.lhs = lr.lhs;
      rec.rhs = lr.rhs;
      rec.abs_diff = lr.abs_diff;
      rec.pass = rec.abs_diff <= tol;
    } catch (const Error& err) {
      rec.abs_diff = std::numeric_limits<double>::infinity();
      rec.pass = false;
      rec.note = err.what();
    }
    report.checks.push_back(std::move(rec));
    ++produced;
  }
  return report;
}

VerificationReport classical_barnes2(SuiteSampler& rng, int instances, double tol) {
  VerificationReport report;
  for (int i = 0; i < instances; ++i) {
    const Complex a = rng.uniform(0.1, 0.6), b = rng.uniform(0.1, 0.6),
                  c = rng.uniform(0.1, 0.6);
    const Complex e = rng.uniform(0.3, 0.8);
    const Complex f = 1.0 + a + b + c - e;
    CheckRecord rec;
    rec.name = "barnes2 #" + std::to_string(i);
    rec.point = {a, b, c, e, f};
    rec.tol = tol;
    try {
      const LemmaReport lr = barnes_second_lemma_check(a, b, c, e, f);
      rec.lhs = lr.lhs;
      rec.rhs = lr.rhs;
      rec.abs_diff = lr.abs_diff;
      rec.pass = rec.abs_diff <= tol;
    } catch (const Error& err) {
      rec.abs_diff = std::numeric_limits<double>::infinity();
      rec.pass = false;
      rec.note = err.what();
    }
    report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace

VerificationReport run_classical_suite(ClassicalCheck which,
                                       const SampleConstraints& constraints,
                                       const ClassicalSuiteOptions& options) {
  constraints.validate();
  SuiteSampler rng(constraints.seed);
  const double margin = constraints.convergence_margin;

  VerificationReport report;
  if (which == ClassicalCheck::thomae || which == ClassicalCheck::all)
    report.append(classical_thomae(rng, options.instances, options.series_tol, margin));
  if (which == ClassicalCheck::bailey || which == ClassicalCheck::all)
    report.append(classical_bailey(rng, options.bailey_instances, options.bailey_max_n));
  if (which == ClassicalCheck::barnes1 || which == ClassicalCheck::all)
    report.append(classical_barnes1(rng, options.instances, options.quadrature_tol));
  if (which == ClassicalCheck::barnes2 || which == ClassicalCheck::all)
    report.append(classical_barnes2(rng, options.instances, options.series_tol));
  if (which == ClassicalCheck::eq530 || which == ClassicalCheck::all)
    report.append(classical_eq530(rng, options.instances, options.series_tol, margin));
  return report;
}

}  // namespace lfunc
