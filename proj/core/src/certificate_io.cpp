#include "weylps/certificate_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace weylps {

namespace {

using nlohmann::json;

json fractions(const NPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

NPolynomial polynomial_from(const json& value, const char* field) {
  if (!value.is_array()) throw std::invalid_argument(std::string("'") + field + "' must be an array of fraction strings");
  std::vector<Rational> coeffs;
  for (const auto& entry : value) {
    if (!entry.is_string()) throw std::invalid_argument(std::string("'") + field + "' entries must be fraction strings");
    coeffs.push_back(parse_rational(entry.get<std::string>()));
  }
  return NPolynomial(std::move(coeffs));
}

}  // namespace

std::string certificate_to_json(const PsCertificate& cert, int indent) {
  json out;
  out["alpha"] = to_string(cert.alpha);
  out["d"] = 1;
  out["target"] = fractions(cert.target);
  out["b_shifts"] = cert.b_shifts;
  json levels = json::array();
  for (const auto& level : cert.levels) levels.push_back({{"k", level.k}, {"s", fractions(level.s)}});
  out["levels"] = levels;
  return out.dump(indent);
}

PsCertificate certificate_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!in.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  for (const char* key : {"alpha", "target", "b_shifts", "levels"}) {
    if (!in.contains(key)) throw std::invalid_argument(std::string("certificate lacks '") + key + "'");
  }
  if (in.contains("d") && in["d"] != 1) throw std::invalid_argument("only d = 1 certificates are supported");
  PsCertificate cert;
  if (!in["alpha"].is_string()) throw std::invalid_argument("'alpha' must be a fraction string");
  cert.alpha = parse_rational(in["alpha"].get<std::string>());
  cert.target = polynomial_from(in["target"], "target");
  if (!in["b_shifts"].is_array()) throw std::invalid_argument("'b_shifts' must be an array of integers");
  for (const auto& v : in["b_shifts"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("'b_shifts' must be an array of integers");
    cert.b_shifts.push_back(v.get<int>());
  }
  if (!in["levels"].is_array()) throw std::invalid_argument("'levels' must be an array");
  for (const auto& level : in["levels"]) {
    if (!level.is_object() || !level.contains("k") || !level.contains("s") || !level["k"].is_number_unsigned()) {
      throw std::invalid_argument("each level needs a non-negative integer 'k' and coefficients 's'");
    }
    cert.levels.push_back({level["k"].get<unsigned>(), polynomial_from(level["s"], "s")});
  }
  return cert;
}

}  // namespace weylps
