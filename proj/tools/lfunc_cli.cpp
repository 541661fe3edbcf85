#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfunc/catalog.hpp"
#include "lfunc/errors.hpp"
#include "lfunc/l_function.hpp"
#include "lfunc/verifier.hpp"

namespace {

using lfunc::Complex;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// complex literal: "re" or "re+imi" / "re-imi", e.g. "0.3+0.2i"
Complex parse_complex(const std::string& text) {
  if (text.empty()) throw lfunc::DomainError("empty parameter literal");
  if (text.back() != 'i') {
    std::size_t used = 0;
    const double re = std::stod(text, &used);
    if (used != text.size()) throw lfunc::DomainError("bad parameter literal: " + text);
    return {re, 0.0};
  }
  const std::string body = text.substr(0, text.size() - 1);
  // split at the sign that separates the two parts (not a leading sign, not
  // an exponent sign)
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      std::size_t used = 0;
      const double re = std::stod(body.substr(0, pos), &used);
      if (used != pos) break;
      const std::string imtext = body.substr(pos);
      const double im = imtext == "+" ? 1.0 : imtext == "-" ? -1.0 : std::stod(imtext);
      return {re, im};
    }
  }
  // pure imaginary, e.g. "0.2i"
  return {0.0, std::stod(body)};
}

std::array<Complex, 7> parse_params(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 7)
    throw lfunc::DomainError("--params needs exactly seven comma-separated values");
  std::array<Complex, 7> x;
  for (int i = 0; i < 7; ++i) x[i] = parse_complex(parts[i]);
  return x;
}

std::string eval_result_json(const lfunc::EvalResult& r) {
  std::ostringstream out;
  out << "{\n"
      << "  \"value\": {\"re\": " << fmt17(r.value.real())
      << ", \"im\": " << fmt17(r.value.imag()) << "},\n"
      << "  \"abs_error_estimate\": " << fmt17(r.abs_error_estimate) << ",\n"
      << "  \"method\": \"" << lfunc::method_name(r.method) << "\",\n"
      << "  \"work\": " << r.work << "\n"
      << "}\n";
  return out.str();
}

void print_report_text(const lfunc::VerificationReport& report, std::ostream& out) {
  for (const lfunc::CheckRecord& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  abs_diff=" << fmt17(c.abs_diff)
        << " tol=" << fmt17(c.tol);
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  out << "summary: total=" << report.total() << " passed=" << report.passed()
      << " failed=" << report.failed() << "\n";
}

int emit_report(const lfunc::VerificationReport& report, const std::string& format,
                std::ostream& out) {
  if (format == "json")
    out << lfunc::report_to_json(report);
  else
    print_report_text(report, out);
  return report.all_pass() ? 0 : 1;
}

std::vector<const lfunc::GroupElement*> select_elements(const std::string& which,
                                                        std::uint64_t seed) {
  const lfunc::Group& group = lfunc::Group::instance();
  std::vector<const lfunc::GroupElement*> out;
  if (which == "all") {
    for (const lfunc::GroupElement& g : group.elements()) out.push_back(&g);
    return out;
  }
  if (which == "reps") {
    static const lfunc::RelationCatalog catalog(group);
    for (const lfunc::DoubleCosetClass& cls : catalog.cosets()) {
      const int idx = group.find(cls.representative.matrix);
      out.push_back(&group.element(idx));
    }
    return out;
  }
  if (which.rfind("random:", 0) == 0) {
    const int k = std::stoi(which.substr(7));
    if (k <= 0 || k > static_cast<int>(group.order()))
      throw lfunc::DomainError("random:K needs 1 <= K <= group order");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      const int idx = static_cast<int>(rng() % group.order());
      if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end())
        chosen.push_back(idx);
    }
    for (int idx : chosen) out.push_back(&group.element(idx));
    return out;
  }
  throw lfunc::DomainError("--elements must be all, reps or random:K");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L function toolkit: evaluation, invariance group, relation catalog, verification"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate L(a,b,c,d;e;f,g)");
  std::string params_csv;
  std::string method = "auto";
  eval_cmd->add_option("--params", params_csv, "seven comma-separated complex values")
      ->required();
  eval_cmd->add_option("--method", method, "auto|series|7f6|barnes")
      ->check(CLI::IsMember({"auto", "series", "7f6", "barnes"}));

  // group info / cosets
  auto* group_cmd = app.add_subcommand("group", "invariance group facts");
  group_cmd->require_subcommand(1);
  auto* info_cmd = group_cmd->add_subcommand("info", "order, sigma size, Coxeter check");
  auto* cosets_cmd = group_cmd->add_subcommand("cosets", "double coset classes");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "export all 1920 relations");
  std::string cat_format = "json";
  std::string out_path;
  catalog_cmd->add_option("--format", cat_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  catalog_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->require_subcommand(1);

  auto* relations_cmd = verify_cmd->add_subcommand("relations", "invariance relations");
  int samples = 5;
  std::string elements = "reps";
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::string rep_format = "text";
  bool complex_parts = false;
  relations_cmd->add_option("--samples", samples, "points per element set");
  relations_cmd->add_option("--elements", elements, "all|reps|random:K");
  relations_cmd->add_option("--tol", tol, "relative tolerance");
  relations_cmd->add_option("--seed", seed, "sampler seed");
  relations_cmd->add_option("--format", rep_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  relations_cmd->add_flag("--complex", complex_parts, "draw complex sample points");

  auto* classical_cmd = verify_cmd->add_subcommand("classical", "classical identities");
  std::string which = "all";
  std::uint64_t cseed = 0;
  double ctol = 1e-6;
  std::string cformat = "text";
  classical_cmd->add_option("--which", which, "thomae|bailey|barnes1|barnes2|eq530|all")
      ->check(CLI::IsMember({"thomae", "bailey", "barnes1", "barnes2", "eq530", "all"}));
  classical_cmd->add_option("--seed", cseed, "instance seed");
  classical_cmd->add_option("--tol", ctol, "tolerance for series-backed checks");
  classical_cmd->add_option("--format", cformat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*eval_cmd) {
      const lfunc::ParameterPoint p = lfunc::make_point(parse_params(params_csv));
      lfunc::LMethod m = lfunc::LMethod::automatic;
      if (method == "series") m = lfunc::LMethod::series;
      else if (method == "7f6") m = lfunc::LMethod::f7f6;
      else if (method == "barnes") m = lfunc::LMethod::barnes;
      std::cout << eval_result_json(lfunc::eval_l(p, m));
      return 0;
    }

    if (*info_cmd) {
      const lfunc::Group& group = lfunc::Group::instance();
      const auto sigma = group.permutation_subgroup();
      const lfunc::CoxeterReport cox = lfunc::verify_coxeter_presentation();
      std::cout << "order=" << group.order() << " sigma=" << sigma.size()
                << " coxeter=" << (cox.ok ? "ok" : "FAIL") << "\n";
      return 0;
    }

    if (*cosets_cmd) {
      const lfunc::RelationCatalog catalog;
      std::vector<const lfunc::DoubleCosetClass*> ordered;
      for (const lfunc::DoubleCosetClass& cls : catalog.cosets()) ordered.push_back(&cls);
      const std::array<std::string, 6> rank = {"I", "II", "III", "IV", "V", "VI"};
      std::sort(ordered.begin(), ordered.end(), [&](const auto* x, const auto* y) {
        return std::find(rank.begin(), rank.end(), x->template_id) <
               std::find(rank.begin(), rank.end(), y->template_id);
      });
      for (const auto* cls : ordered)
        std::cout << "template=" << cls->template_id << " size=" << cls->size
                  << " representative=" << cls->representative.word_string() << "\n";
      return 0;
    }

    if (*catalog_cmd) {
      const lfunc::RelationCatalog catalog;
      const lfunc::CatalogFormat fmt =
          cat_format == "text" ? lfunc::CatalogFormat::text : lfunc::CatalogFormat::json;
      if (out_path.empty())
        catalog.export_catalog(fmt, std::cout);
      else
        catalog.export_catalog(fmt, out_path);
      return 0;
    }

    if (*relations_cmd) {
      lfunc::SampleConstraints cs;
      cs.seed = seed;
      cs.complex_parts = complex_parts;
      const auto elems = select_elements(elements, seed);
      const lfunc::VerificationReport report =
          lfunc::verify_invariance(elems, samples, tol, cs);
      return emit_report(report, rep_format, std::cout);
    }

    if (*classical_cmd) {
      lfunc::SampleConstraints cs;
      cs.seed = cseed;
      lfunc::ClassicalCheck check = lfunc::ClassicalCheck::all;
      if (which == "thomae") check = lfunc::ClassicalCheck::thomae;
      else if (which == "bailey") check = lfunc::ClassicalCheck::bailey;
      else if (which == "barnes1") check = lfunc::ClassicalCheck::barnes1;
      else if (which == "barnes2") check = lfunc::ClassicalCheck::barnes2;
      else if (which == "eq530") check = lfunc::ClassicalCheck::eq530;
      lfunc::ClassicalSuiteOptions options;
      options.series_tol = ctol;
      const lfunc::VerificationReport report =
          lfunc::run_classical_suite(check, cs, options);
      return emit_report(report, cformat, std::cout);
    }
  } catch (const lfunc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
