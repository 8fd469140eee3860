#pragma once

// JSON encodings.
//
// A rational is written as a [num, den] pair of integers; components that do
// not fit a signed 64-bit integer are written as decimal strings instead.
// Readers also accept a bare integer or a "p/q" string.
//
//   Polytope         {"dim": d, "vertices": [[q, ...], ...]}
//   DiscreteMeasure  {"atoms": [[q, ...], ...], "weights": [q, ...]}
//   Characterization {"a": [q, ...], "relint": b, "condition_ii": b,
//                     "alpha_max_per_vertex": [q | "inf", ...], "agrees": b}

#include "barylab/characterize.hpp"
#include "barylab/geometry.hpp"
#include "barylab/measure.hpp"
#include "barylab/rational.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

namespace barylab::json_io {

using json = nlohmann::json;

namespace detail {

inline json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) return barylab::detail::parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

}  // namespace detail

inline json to_json(const Rational& q) {
  return json::array({detail::integer_to_json(numerator_of(q)), detail::integer_to_json(denominator_of(q))});
}

inline Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("rational pair must have two entries: " + j.dump());
    return make_rational(detail::integer_from_json(j[0]), detail::integer_from_json(j[1]));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(detail::integer_from_json(j));
  throw InputError("expected a rational, got " + j.dump());
}

inline json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RationalVector out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

inline json to_json(const Polytope& m) {
  json vs = json::array();
  for (const auto& v : m.vertices()) vs.push_back(to_json(v));
  return {{"dim", m.ambient_dim()}, {"vertices", std::move(vs)}};
}

inline Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("polytope JSON needs a \"vertices\" array");
  std::vector<RationalVector> vs;
  for (const auto& v : j.at("vertices")) vs.push_back(vector_from_json(v));
  if (j.contains("dim")) {
    const auto d = j.at("dim").get<std::size_t>();
    for (const auto& v : vs)
      if (v.size() != d) throw InputError("polytope vertex dimension differs from \"dim\"");
  }
  return Polytope(std::move(vs));
}

inline json to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const auto& x : mu.atoms()) atoms.push_back(to_json(x));
  return {{"atoms", std::move(atoms)}, {"weights", to_json(mu.weights())}};
}

inline DiscreteMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("weights"))
    throw InputError("measure JSON needs \"atoms\" and \"weights\"");
  std::vector<RationalVector> atoms;
  for (const auto& x : j.at("atoms")) atoms.push_back(vector_from_json(x));
  return DiscreteMeasure(std::move(atoms), vector_from_json(j.at("weights")));
}

inline json to_json(const ProlongationResult& r) {
  if (r.unbounded) return "inf";
  return to_json(r.alpha_max);
}

inline json to_json(const CharacterizationReport& r) {
  json alphas = json::array();
  for (const auto& p : r.alpha_max_per_vertex) alphas.push_back(to_json(p));
  return {{"a", to_json(r.a)},
          {"relint", r.relint},
          {"condition_ii", r.condition_ii},
          {"alpha_max_per_vertex", std::move(alphas)},
          {"agrees", r.agrees()}};
}

/// Parses JSON text, mapping syntax errors to InputError.
inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace barylab::json_io
