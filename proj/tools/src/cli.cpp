#include "weylps_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "weylps/certificate_io.hpp"
#include "weylps/certificates.hpp"
#include "weylps/expression.hpp"
#include "weylps/fock.hpp"
#include "weylps/relations.hpp"
#include "weylps/top_symbol.hpp"

namespace weylps::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

std::optional<Rational> optional_alpha(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Rational alpha = rational_arg(text, "alpha");
  validate_alpha(alpha);
  return alpha;
}

AlgebraValue parse_value(const std::string& text, std::size_t dim, const std::optional<Rational>& alpha) {
  auto expr = parse_expression(text);
  return evaluate(*expr, dim, alpha);
}

WeylElement parse_weyl(const std::string& text, std::size_t dim) {
  auto expr = parse_expression(text);
  if (expr->needs_localization()) throw UsageError("expression must lie in W(d); y(n) and x(k,l) are not allowed here");
  return evaluate_weyl(*expr, dim);
}

NPolynomial parse_poly(const std::string& text) {
  auto p = to_n_polynomial(parse_weyl(text, 1));
  if (!p) throw UsageError("not a polynomial in N with rational coefficients: '" + text + "'");
  return *p;
}

json coefficients_json(const NPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

json levels_json(const std::vector<Level>& levels) {
  json out = json::array();
  for (const auto& level : levels) out.push_back({{"k", level.k}, {"s", coefficients_json(level.s)}, {"s_text", to_string(level.s)}});
  return out;
}

std::string degree_text(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

struct Common {
  std::size_t dim = 1;
  std::string alpha;
  std::string expr;
  bool json = false;
};

int cmd_normalize(const Common& c, std::ostream& out) {
  out << to_string(parse_value(c.expr, c.dim, optional_alpha(c.alpha))) << "\n";
  return kOk;
}

int cmd_adjoint(const Common& c, std::ostream& out) {
  auto v = parse_value(c.expr, c.dim, optional_alpha(c.alpha));
  if (auto* w = std::get_if<WeylElement>(&v)) {
    out << to_string(adjoint(*w)) << "\n";
  } else {
    out << to_string(l_adjoint(std::get<LocalizedElement>(v))) << "\n";
  }
  return kOk;
}

int cmd_degree(const Common& c, std::ostream& out) {
  out << degree_text(degree(parse_weyl(c.expr, c.dim))) << "\n";
  return kOk;
}

int cmd_symbol(const Common& c, std::ostream& out) {
  auto x = parse_weyl(c.expr, c.dim);
  if (x.is_zero()) throw UsageError("the zero element has no top symbol");
  out << to_string(top_symbol(x)) << "\n";
  return kOk;
}

int cmd_check_sphere(const Common& c, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  auto x = parse_weyl(c.expr, c.dim);
  if (x.is_zero()) throw UsageError("the zero element has no top symbol");
  auto verdict = check_condition_ii(top_symbol(x), {.samples = samples, .seed = seed});
  int code = kInconclusive;
  json j{{"verdict", verdict_name(verdict)}};
  std::string detail;
  if (auto* p = std::get_if<CertifiedPositive>(&verdict)) {
    code = kOk;
    j["lower_bound"] = to_string(p->lower_bound);
    detail = "symbol >= " + to_string(p->lower_bound) + " on the unit sphere";
  } else if (auto* n = std::get_if<CertifiedNegative>(&verdict)) {
    code = kNegative;
    j["upper_bound"] = to_string(n->upper_bound);
    detail = "symbol <= " + to_string(n->upper_bound) + " on the unit sphere";
  } else if (auto* z = std::get_if<CertifiedZeroAt>(&verdict)) {
    code = kNegative;
    json pt = json::array();
    std::ostringstream s;
    s << "zero at z = (";
    for (std::size_t i = 0; i < z->point.size(); ++i) {
      pt.push_back({z->point[i].real(), z->point[i].imag()});
      s << (i ? ", " : "") << z->point[i].real() << (z->point[i].imag() < 0 ? " - " : " + ")
        << std::abs(z->point[i].imag()) << "i";
    }
    s << ")";
    if (z->exact) {
      json ex = json::array();
      std::string exact;
      for (const auto& v : *z->exact) {
        ex.push_back(to_string(v));
        exact += (exact.empty() ? "" : ", ") + to_string(v);
      }
      j["exact"] = ex;
      s << ", exactly (" << exact << ")";
    }
    j["point"] = pt;
    detail = s.str();
  } else if (auto* h = std::get_if<HeuristicPositive>(&verdict)) {
    j["sampled_min"] = h->sampled_min;
    std::ostringstream s;
    s << "sampled minimum " << h->sampled_min << " over " << samples << " points (not a certificate)";
    detail = s.str();
  } else {
    detail = std::get<Inconclusive>(verdict).reason;
    j["reason"] = detail;
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << verdict_name(verdict) << ": " << detail << "\n";
  }
  return code;
}

int cmd_verify_relations(const Common& c, int max_n, bool unsquared_r6, bool verbose, std::ostream& out) {
  auto alpha = optional_alpha(c.alpha);
  if (!alpha) throw UsageError("--alpha is required");
  if (c.dim < 1) throw UsageError("-d must be at least 1");
  auto results = relation_suite(c.dim, *alpha, max_n, unsquared_r6);
  std::size_t failed = 0;
  json failures = json::array();
  for (const auto& r : results) {
    if (r.holds) {
      if (verbose && !c.json) out << "Holds  " << r.label << "\n";
      continue;
    }
    ++failed;
    std::string diff = r.difference ? to_string(*r.difference) : "";
    failures.push_back({{"relation", r.label}, {"difference", diff}});
    if (!c.json) out << "FAILS  " << r.label << "  difference: " << diff << "\n";
  }
  if (c.json) {
    out << json{{"d", c.dim}, {"alpha", to_string(*alpha)}, {"total", results.size()}, {"failed", failed},
                {"failures", failures}}
               .dump(2)
        << "\n";
  } else {
    out << results.size() - failed << "/" << results.size() << " relations hold (d = " << c.dim
        << ", alpha = " << to_string(*alpha) << ")\n";
  }
  return failed == 0 ? kOk : kNegative;
}

int cmd_fock_mineig(const Common& c, unsigned level, const std::string& eps_text, std::ostream& out) {
  optional_alpha(c.alpha);
  Rational eps = rational_arg(eps_text, "epsilon");
  auto r = min_eig_interior(parse_weyl(c.expr, c.dim), eps, level);
  std::string verdict = r.falsified ? "Falsified" : "ConsistentUpTo";
  std::ostringstream value;
  value << r.value;
  if (c.json) {
    json j{{"verdict", verdict}, {"level", r.level}, {"interior_level", r.interior_level}, {"value", r.value}};
    if (r.exact_value) j["exact_value"] = to_string(*r.exact_value);
    if (r.falsified) j["witness_state"] = r.dominant_state;
    out << j.dump(2) << "\n";
  } else {
    out << verdict << " " << r.level << ": min eigenvalue of c - epsilon on |n| <= " << r.interior_level << " is "
        << (r.exact_value ? to_string(*r.exact_value) : value.str());
    if (r.falsified) out << ", witness dominated by e_" << to_string(r.dominant_state);
    out << "\n";
  }
  return r.falsified ? kNegative : kOk;
}

int cmd_positive_naturals(const std::string& poly, bool strict, bool as_json, std::ostream& out) {
  auto p = parse_poly(poly);
  auto v = strict ? is_strictly_positive_on_naturals(p) : is_positive_on_naturals(p);
  if (as_json) {
    json j{{"positive", v.positive}, {"strict", strict}};
    if (v.witness) j["witness"] = *v.witness;
    out << j.dump(2) << "\n";
  } else if (v.positive) {
    out << "True: p(n) " << (strict ? ">" : ">=") << " 0 for every natural n\n";
  } else {
    out << "False: p(" << *v.witness << ") = " << to_string(p.eval(Rational(*v.witness))) << "\n";
  }
  return v.positive ? kOk : kNegative;
}

int cmd_sos_check(const std::string& poly, bool as_json, std::ostream& out) {
  auto p = parse_poly(poly);
  auto r = sigma2_membership(p);
  int code = r.status == Membership::Member ? kOk : r.status == Membership::NotMember ? kNegative : kInconclusive;
  if (as_json) {
    json j{{"verdict", membership_name(r.status)}, {"method", r.method}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.status == Membership::Member) j["levels"] = levels_json(r.levels);
    if (r.natural_witness) j["natural_witness"] = *r.natural_witness;
    if (r.dual_moments) {
      json m = json::array();
      for (const auto& y : *r.dual_moments) m.push_back(to_string(y));
      j["dual_moments"] = m;
    }
    out << j.dump(2) << "\n";
    return code;
  }
  out << membership_name(r.status) << " (" << r.method << ")";
  if (!r.note.empty()) out << ": " << r.note;
  out << "\n";
  for (const auto& level : r.levels) out << "  k = " << level.k << ": s = " << to_string(level.s) << "\n";
  if (r.natural_witness) out << "  p(" << *r.natural_witness << ") < 0\n";
  if (r.dual_moments) {
    out << "  separating moments:";
    for (const auto& y : *r.dual_moments) out << " " << to_string(y);
    out << "\n";
  }
  return code;
}

int cmd_find_certificate(const std::string& poly, const std::string& alpha_text, unsigned max_factors,
                         unsigned shift_range, const std::string& output, bool as_json, std::ostream& out) {
  auto p = parse_poly(poly);
  Rational alpha = rational_arg(alpha_text, "alpha");
  validate_alpha(alpha);
  auto strict = is_strictly_positive_on_naturals(p);
  if (!strict.positive) {
    if (as_json) {
      out << json{{"verdict", "NotApplicable"}, {"witness", *strict.witness}}.dump(2) << "\n";
    } else {
      out << "NotApplicable: p(" << *strict.witness << ") = " << to_string(p.eval(Rational(*strict.witness)))
          << " is not positive\n";
    }
    return kNegative;
  }
  auto r = find_positivstellensatz(p, alpha, max_factors, shift_range);
  if (!r.certificate) {
    std::string verdict = r.inconclusive ? "Inconclusive" : "NotFound";
    if (as_json) {
      out << json{{"verdict", verdict}, {"candidates", r.candidates_tried}, {"inconclusive", r.inconclusive}}.dump(2)
          << "\n";
    } else {
      out << verdict << ": " << r.candidates_tried << " denominators tried, " << r.inconclusive
          << " inconclusive\n";
    }
    return r.inconclusive ? kInconclusive : kNegative;
  }
  const auto& cert = *r.certificate;
  std::string text = certificate_to_json(cert);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write '" + output + "'");
    file << text << "\n";
  }
  if (as_json) {
    out << text << "\n";
    return kOk;
  }
  out << "Found after " << r.candidates_tried << " candidates: b = " << to_string(b_polynomial(alpha, cert.b_shifts))
      << "\n";
  for (const auto& level : cert.levels) out << "  k = " << level.k << ": s = " << to_string(level.s) << "\n";
  if (output.empty()) out << text << "\n";
  else out << "written to " << output << "\n";
  return kOk;
}

int cmd_verify_certificate(const std::string& path, bool as_json, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  PsCertificate cert;
  try {
    cert = certificate_from_json(buffer.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
  auto check = verify_certificate(cert);
  if (as_json) {
    json j{{"verdict", check.valid ? "Valid" : "Invalid"}};
    if (!check.valid) j["reason"] = check.reason;
    out << j.dump(2) << "\n";
  } else {
    out << (check.valid ? "Valid" : "Invalid: " + check.reason) << "\n";
  }
  return check.valid ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weyl algebra computations and strict Positivstellensatz certificates", "weylps"};
  app.require_subcommand(1);

  Common common;
  std::size_t samples = 10000;
  std::uint64_t seed = 20101;
  int max_n = 3;
  bool unsquared_r6 = false, verbose = false, strict = false;
  unsigned level = 0, max_factors = 1, shift_range = 0;
  std::string epsilon = "0", output, path;

  auto expr_command = [&](const char* name, const char* help, bool with_alpha, bool verdict) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-d,--dim", common.dim, "number of modes")->check(CLI::PositiveNumber);
    if (with_alpha) sub->add_option("--alpha", common.alpha, "localization parameter, positive and not an integer");
    sub->add_option("expr", common.expr, "expression")->required();
    if (verdict) sub->add_flag("--json", common.json, "machine-readable output");
    return sub;
  };

  auto* normalize = expr_command("normalize", "print the canonical form", true, false);
  auto* adjoint_cmd = expr_command("adjoint", "print the adjoint", true, false);
  auto* degree_cmd = expr_command("degree", "print the filtration degree", false, false);
  auto* symbol = expr_command("symbol", "print the top symbol", false, false);
  auto* sphere = expr_command("check-sphere", "decide whether the top symbol vanishes on the sphere", false, true);
  sphere->add_option("--samples", samples, "sample count for d >= 2");
  sphere->add_option("--seed", seed, "sampling seed for d >= 2");

  auto* relations = app.add_subcommand("verify-relations", "check the relations of the localized algebra");
  relations->add_option("-d,--dim", common.dim, "number of modes")->check(CLI::PositiveNumber);
  relations->add_option("--alpha", common.alpha, "localization parameter")->required();
  relations->add_option("--max-n", max_n, "largest shift parameter")->check(CLI::NonNegativeNumber);
  relations->add_flag("--unsquared-r6", unsquared_r6, "also check r6 with (1 - y_2) unsquared");
  relations->add_flag("-v,--verbose", verbose, "list every relation");
  relations->add_flag("--json", common.json, "machine-readable output");

  auto* mineig = expr_command("fock-mineig", "falsification test for c - epsilon >= 0 in the Fock space", true, true);
  mineig->add_option("--level,-L", level, "truncation level")->required();
  mineig->add_option("--epsilon", epsilon, "margin");

  auto* naturals = app.add_subcommand("positive-naturals", "decide p(n) >= 0 on the naturals");
  naturals->add_option("poly", common.expr, "polynomial in N")->required();
  naturals->add_flag("--strict", strict, "decide p(n) > 0 instead");
  naturals->add_flag("--json", common.json, "machine-readable output");

  auto* sos = app.add_subcommand("sos-check", "decide membership of p(N) in the sums of hermitean squares");
  sos->add_option("poly", common.expr, "polynomial in N")->required();
  sos->add_flag("--json", common.json, "machine-readable output");

  auto* find = app.add_subcommand("find-certificate", "search for b with b p(N) b a sum of hermitean squares");
  find->add_option("poly", common.expr, "polynomial in N")->required();
  find->add_option("--alpha", common.alpha, "localization parameter")->required();
  find->add_option("--max-factors", max_factors, "largest number of factors in b");
  find->add_option("--shift-range", shift_range, "largest |n_i| in b = prod (N + alpha + n_i)");
  find->add_option("-o,--output", output, "certificate file");
  find->add_flag("--json", common.json, "machine-readable output");

  auto* verify = app.add_subcommand("verify-certificate", "check a certificate file exactly");
  verify->add_option("file", path, "certificate JSON")->required();
  verify->add_flag("--json", common.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(common, out);
    if (adjoint_cmd->parsed()) return cmd_adjoint(common, out);
    if (degree_cmd->parsed()) return cmd_degree(common, out);
    if (symbol->parsed()) return cmd_symbol(common, out);
    if (sphere->parsed()) return cmd_check_sphere(common, samples, seed, out);
    if (relations->parsed()) return cmd_verify_relations(common, max_n, unsquared_r6, verbose, out);
    if (mineig->parsed()) return cmd_fock_mineig(common, level, epsilon, out);
    if (naturals->parsed()) return cmd_positive_naturals(common.expr, strict, common.json, out);
    if (sos->parsed()) return cmd_sos_check(common.expr, common.json, out);
    if (find->parsed())
      return cmd_find_certificate(common.expr, common.alpha, max_factors, shift_range, output, common.json, out);
    if (verify->parsed()) return cmd_verify_certificate(path, common.json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace weylps::cli
