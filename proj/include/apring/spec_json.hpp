#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "apring/errors.hpp"
#include "apring/frequency.hpp"
#include "apring/polynomial.hpp"
#include "apring/rational.hpp"

namespace apring {

// JSON polynomial schema:
//   {"terms": [{"modulus": 1, "phase": 0, "frequency": {...}}, ...]}
// with frequency one of
//   {"kind": "sqrt", "radicand": 2, "scale": 1}
//   {"kind": "rational", "num": 1, "den": 1}
//   {"kind": "real", "value": 1.414}
// Unknown keys are rejected.

namespace detail {

inline void require_keys(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw SpecParseError(where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const std::string& key : allowed)
      if (item.key() == key) {
        ok = true;
        break;
      }
    if (!ok) throw SpecParseError("unknown key '" + item.key() + "' in " + where);
  }
}

inline std::int64_t require_int(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SpecParseError(where + " must be an integer");
  return v.get<std::int64_t>();
}

inline double require_number(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number()) throw SpecParseError(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SpecParseError(where + " must be finite");
  return d;
}

}  // namespace detail

inline Frequency parse_frequency_json(const nlohmann::json& obj) {
  if (!obj.is_object() || !obj.contains("kind"))
    throw SpecParseError("frequency must be an object with a 'kind'");
  const std::string kind = obj.at("kind").is_string() ? obj.at("kind").get<std::string>() : "";
  if (kind == "sqrt") {
    detail::require_keys(obj, {"kind", "radicand", "scale"}, "sqrt frequency");
    if (!obj.contains("radicand")) throw SpecParseError("sqrt frequency needs 'radicand'");
    const std::int64_t radicand = detail::require_int(obj.at("radicand"), "radicand");
    Rational scale(1, 1);
    if (obj.contains("scale"))
      scale = Rational::from_double(detail::require_number(obj.at("scale"), "scale"));
    return Frequency::sqrt_integer(radicand, scale);
  }
  if (kind == "rational") {
    detail::require_keys(obj, {"kind", "num", "den"}, "rational frequency");
    if (!obj.contains("num")) throw SpecParseError("rational frequency needs 'num'");
    const std::int64_t num = detail::require_int(obj.at("num"), "num");
    std::int64_t den = 1;
    if (obj.contains("den")) den = detail::require_int(obj.at("den"), "den");
    if (den < 1) throw SpecParseError("rational frequency needs den >= 1");
    return Frequency::rational(num, den);
  }
  if (kind == "real") {
    detail::require_keys(obj, {"kind", "value"}, "real frequency");
    if (!obj.contains("value")) throw SpecParseError("real frequency needs 'value'");
    return Frequency::real(detail::require_number(obj.at("value"), "value"));
  }
  throw SpecParseError("frequency kind must be 'sqrt', 'rational' or 'real'");
}

inline TrigPolynomial parse_polynomial_spec(const nlohmann::json& spec) {
  detail::require_keys(spec, {"terms"}, "polynomial spec");
  if (!spec.contains("terms") || !spec.at("terms").is_array() || spec.at("terms").empty())
    throw SpecParseError("polynomial spec needs a nonempty 'terms' array");
  std::vector<Term> terms;
  for (const nlohmann::json& t : spec.at("terms")) {
    detail::require_keys(t, {"modulus", "phase", "frequency"}, "term");
    if (!t.contains("modulus")) throw SpecParseError("term needs 'modulus'");
    Term term;
    term.modulus = detail::require_number(t.at("modulus"), "modulus");
    if (term.modulus < 0.0) throw SpecParseError("modulus must be nonnegative");
    if (t.contains("phase")) term.phase = detail::require_number(t.at("phase"), "phase");
    if (!t.contains("frequency")) throw SpecParseError("term needs 'frequency'");
    term.frequency = parse_frequency_json(t.at("frequency"));
    terms.push_back(term);
  }
  return TrigPolynomial(std::move(terms));
}

inline nlohmann::ordered_json frequency_json(const Frequency& f) {
  nlohmann::ordered_json out;
  switch (f.kind()) {
    case FrequencyKind::SqrtInteger:
      out["kind"] = "sqrt";
      out["radicand"] = f.radicand();
      out["scale"] = f.scale().value();
      break;
    case FrequencyKind::Rational:
      out["kind"] = "rational";
      out["num"] = f.rational_value().num;
      out["den"] = f.rational_value().den;
      break;
    case FrequencyKind::Real:
      out["kind"] = "real";
      out["value"] = f.numeric_value();
      break;
  }
  return out;
}

inline nlohmann::ordered_json polynomial_spec_json(const TrigPolynomial& f) {
  nlohmann::ordered_json out;
  out["terms"] = nlohmann::ordered_json::array();
  for (const Term& t : f.terms()) {
    nlohmann::ordered_json jt;
    jt["modulus"] = t.modulus;
    jt["phase"] = t.phase;
    jt["frequency"] = frequency_json(t.frequency);
    out["terms"].push_back(jt);
  }
  return out;
}

}  // namespace apring
