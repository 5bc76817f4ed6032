#ifndef FPTLAB_JSON_IO_HPP
#define FPTLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fptlab/digits.hpp"
#include "fptlab/ideal.hpp"
#include "fptlab/lct.hpp"
#include "fptlab/nu.hpp"
#include "fptlab/testideal.hpp"

namespace fptlab {

using nlohmann::json;

// Every rational crosses the interface as an exact "num/den" string.
inline json rational_json(const Rational& r) { return rational_to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw parse_error("expected a rational as \"num/den\" string");
}

inline json ext_index_json(const ExtIndex& e) {
  if (!e) return nullptr; // infinity
  return *e;
}

inline json digitstream_json(const DigitStream& s) {
  return json{{"prime", s.prime}, {"preperiod", s.preperiod}, {"period", s.period}};
}

inline json polynomial_json(const Polynomial& f) {
  json terms = json::array();
  for (std::size_t i = 0; i < f.nterms(); ++i) {
    auto e = f.exps_view(i);
    terms.push_back(json{{"exps", std::vector<std::int64_t>(e.begin(), e.end())},
                         {"coeff", f.coeff(i)}});
  }
  return json{{"prime", f.prime()}, {"vars", f.context().names()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
  try {
    std::uint32_t p = j.at("prime").get<std::uint32_t>();
    VarContext ctx(j.at("vars").get<std::vector<std::string>>());
    std::vector<std::pair<Exponents, std::uint64_t>> terms;
    for (const auto& t : j.at("terms")) {
      terms.emplace_back(t.at("exps").get<Exponents>(), t.at("coeff").get<std::uint64_t>());
    }
    return Polynomial::from_terms(p, ctx, std::move(terms));
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline json ideal_json(const Ideal& i) {
  json gens = json::array();
  for (const auto& g : i.generators()) gens.push_back(polynomial_json(g));
  return json{{"generators", gens}};
}

inline Ideal ideal_from_json(const json& j) {
  try {
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(polynomial_from_json(g));
    return Ideal(std::move(gens));
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed ideal JSON: ") + e.what());
  }
}

inline const char* fpt_class_name(FptClass c) {
  switch (c) {
    case FptClass::EqualsOne: return "EQUALS_ONE";
    case FptClass::PPowerDenominator: return "P_POWER_DENOMINATOR";
    case FptClass::Generic: return "GENERIC";
  }
  return "?";
}

inline json fpt_value_json(const FptValue& v) {
  json out{{"value", rational_json(v.value)}, {"classification", fpt_class_name(v.classification)}};
  if (v.profile) {
    out["L"] = ext_index_json(v.profile->L);
    out["d"] = ext_index_json(v.profile->d);
  } else {
    out["L"] = nullptr;
    out["d"] = nullptr;
  }
  return out;
}

inline json nu_record_json(const NuRecord& r) {
  return json{{"prime", r.f.prime()},
              {"e", r.e},
              {"nu", r.nu},
              {"truncation", rational_json(r.truncation)},
              {"poly", polynomial_json(r.f)},
              {"ideal", ideal_json(r.j)}};
}

// Expression JSON: {op, ...} with op one of sum|prod|pow|monomial|diagonal|
// import; an "imports" object may ride on the root node.
inline Expr expr_from_json_node(const json& j) {
  try {
    std::string op = j.at("op").get<std::string>();
    if (op == "monomial") return Expr::monomial(j.at("exps").get<std::vector<std::uint64_t>>());
    if (op == "diagonal") return Expr::diagonal(j.at("degs").get<std::vector<std::uint64_t>>());
    if (op == "sum")
      return Expr::sum(expr_from_json_node(j.at("left")), expr_from_json_node(j.at("right")));
    if (op == "prod")
      return Expr::product(expr_from_json_node(j.at("left")), expr_from_json_node(j.at("right")));
    if (op == "pow")
      return Expr::power(expr_from_json_node(j.at("inner")), j.at("n").get<std::uint64_t>());
    if (op == "import") return Expr::imported(j.at("id").get<std::string>());
    throw parse_error("unknown expression op: " + op);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed expression JSON: ") + e.what());
  }
}

inline Expr expr_from_json(const json& j, ImportTable& imports) {
  imports.clear();
  if (j.contains("imports")) {
    try {
      for (const auto& [id, spec] : j.at("imports").items()) {
        ImportSpec s;
        s.a = rational_from_json(spec.at("a"));
        if (spec.contains("primes")) s.primes = parse_congruence(spec.at("primes").get<std::string>());
        imports[id] = std::move(s);
      }
    } catch (const json::exception& e) {
      throw parse_error(std::string("malformed imports JSON: ") + e.what());
    }
  }
  return expr_from_json_node(j);
}

inline json scan_report_json(const ScanReport& r) {
  json out{{"prime", r.prime},
           {"lct", rational_json(r.lct)},
           {"match", r.match},
           {"congruence_notes", r.congruence_notes}};
  out["fpt"] = r.fpt ? rational_json(*r.fpt) : json(nullptr);
  out["applicable"] = r.fpt.has_value();
  return out;
}

inline json scan_result_json(const ScanResult& r) {
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(scan_report_json(rep));
  json bands = json::array();
  for (const auto& b : r.bands) {
    if (!b.applicable) continue;
    bands.push_back(json{{"lo", b.lo},
                         {"hi", b.hi},
                         {"applicable", b.applicable},
                         {"max_deviation", b.max_deviation ? rational_json(*b.max_deviation)
                                                           : json(nullptr)}});
  }
  return json{{"lct", rational_json(r.lct)},
              {"matches", r.matches},
              {"reports", reports},
              {"deviation_bands", bands},
              {"deviation_non_increasing", r.deviation_non_increasing}};
}

} // namespace fptlab

#endif
