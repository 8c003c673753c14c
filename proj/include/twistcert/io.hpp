#pragma once

// JSON and CSV serialization of reports, certificates and polynomials.

#include "twistcert/orderability.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

namespace twistcert {

inline constexpr const char* kSchemaVersion = "1";

using nlohmann::json;

namespace detail {
template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}
template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}
}  // namespace detail

inline void to_json(json& j, const DoubleTwistKnot& K) {
  j = json{{"k", K.k}, {"n", K.n}, {"l", K.l()}, {"name", K.name()},
           {"mirrored", K.mirrored}, {"swapped", K.swapped}, {"rewritten", K.rewritten}};
}
inline void from_json(const json& j, DoubleTwistKnot& K) {
  K.k = j.at("k").get<int>();
  K.n = j.at("n").get<int>();
  K.mirrored = j.at("mirrored").get<bool>();
  K.swapped = j.at("swapped").get<bool>();
  K.rewritten = j.at("rewritten").get<bool>();
}

inline void to_json(json& j, const ThresholdReport& t) {
  j = json{{"knot", t.knot}, {"class", to_string(t.tag)}, {"m", t.m}, {"rule", t.rule},
           {"known_non_orderable", t.known_non_orderable}, {"notes", t.notes}};
  detail::put_optional(j, "q_or_4mn", t.q_or_4mn);
  detail::put_optional(j, "arccos_threshold", t.arccos_threshold);
  detail::put_optional(j, "threshold", t.threshold);
  detail::put_optional(j, "r_min", t.r_min);
  if (!t.knot.is_trivial()) j["schubert"] = schubert_form(t.knot).name();
}
inline void from_json(const json& j, ThresholdReport& t) {
  t.knot = j.at("knot").get<DoubleTwistKnot>();
  t.tag = knot_case_from_string(j.at("class").get<std::string>());
  t.m = j.at("m").get<int>();
  t.rule = j.at("rule").get<std::string>();
  t.known_non_orderable = j.at("known_non_orderable").get<bool>();
  t.notes = j.at("notes").get<std::vector<std::string>>();
  t.q_or_4mn = detail::get_optional<double>(j, "q_or_4mn");
  t.arccos_threshold = detail::get_optional<double>(j, "arccos_threshold");
  t.threshold = detail::get_optional<double>(j, "threshold");
  t.r_min = detail::get_optional<long>(j, "r_min");
}

inline void to_json(json& j, const Certificate& c) {
  j = json{{"knot", c.knot},
           {"r", c.r},
           {"x", c.x},
           {"y_decimal", c.y_decimal},
           {"signature", {c.signature_pos, c.signature_neg}},
           {"precision_bits", c.precision_bits},
           {"known_non_orderable", c.known_non_orderable},
           {"verdict", to_string(c.verdict)},
           {"notes", c.notes}};
  detail::put_optional(j, "y", c.y);
  detail::put_optional(j, "phi_residual", c.phi_residual);
  detail::put_optional(j, "relation_residual", c.relation_residual);
  detail::put_optional(j, "commutator_distance", c.commutator_distance);
  detail::put_optional(j, "su11_residual", c.su11_residual);
  detail::put_optional(j, "meridian_residual", c.meridian_residual);
  detail::put_optional(j, "above_threshold", c.above_threshold);
}
inline void from_json(const json& j, Certificate& c) {
  c.knot = j.at("knot").get<DoubleTwistKnot>();
  c.r = j.at("r").get<long>();
  c.x = j.at("x").get<double>();
  c.y_decimal = j.at("y_decimal").get<std::string>();
  c.signature_pos = j.at("signature").at(0).get<int>();
  c.signature_neg = j.at("signature").at(1).get<int>();
  c.precision_bits = j.at("precision_bits").get<long>();
  c.known_non_orderable = j.at("known_non_orderable").get<bool>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.notes = j.at("notes").get<std::vector<std::string>>();
  c.y = detail::get_optional<double>(j, "y");
  c.phi_residual = detail::get_optional<double>(j, "phi_residual");
  c.relation_residual = detail::get_optional<double>(j, "relation_residual");
  c.commutator_distance = detail::get_optional<double>(j, "commutator_distance");
  c.su11_residual = detail::get_optional<double>(j, "su11_residual");
  c.meridian_residual = detail::get_optional<double>(j, "meridian_residual");
  c.above_threshold = detail::get_optional<bool>(j, "above_threshold");
}

/// Sorted term list [[deg_x, deg_y, "coefficient"], ...] (coefficients as
/// decimal strings; they outgrow 64 bits).
inline json poly_terms_json(const IntPolyXY& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.str()});
  return terms;
}

inline IntPolyXY poly_from_terms_json(const json& terms) {
  IntPolyXY p;
  for (const auto& t : terms) p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), Integer(t.at(2).get<std::string>()));
  return p;
}

inline json output_record(const std::string& command, json payload) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}, {"payload", std::move(payload)}};
}

/// %.17g
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace twistcert
