#pragma once

// JSON encodings for scalars, regions, rules and exactness reports.
// Integers are written as decimal strings; readers also accept numbers.

#include <string>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

#include "simpson/exactness.hpp"

namespace simpson {

using Json = nlohmann::json;

namespace detail {

inline Json rational_pair(const Rational& r) { return Json::array({r.numerator().get_str(), r.denominator().get_str()}); }

inline BigInt json_integer(const Json& j) {
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid integer string: " + j.get<std::string>());
    return v;
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long long>()));
    return BigInt(std::to_string(j.get<long long>()));
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline Rational json_rational_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [numerator, denominator], got " + j.dump());
  const BigInt den = json_integer(j[1]);
  if (den == 0) throw ParseError("zero denominator in " + j.dump());
  return Rational(json_integer(j[0]), den);
}

}  // namespace detail

inline Json to_json(const Scalar& s) {
  if (s.is_rational()) return {{"rat", detail::rational_pair(s.as_rational())}};
  if (s.is_pi()) return {{"pi", detail::rational_pair(s.as_pi().coefficient())}};
  const auto& q = s.as_quadratic();
  return {{"quad",
           {{"a", detail::rational_pair(q.rational_part())},
            {"b", detail::rational_pair(q.surd_part())},
            {"rad", std::to_string(q.radicand())}}}};
}

inline Scalar scalar_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("scalar must be an object with one key, got " + j.dump());
  if (j.contains("rat")) return detail::json_rational_pair(j["rat"]);
  if (j.contains("pi")) return Scalar::pi(detail::json_rational_pair(j["pi"]));
  if (j.contains("quad")) {
    const Json& q = j["quad"];
    if (!q.contains("a") || !q.contains("b") || !q.contains("rad")) throw ParseError("quad needs a, b and rad");
    const BigInt rad = detail::json_integer(q["rad"]);
    if (!rad.fits_slong_p()) throw ParseError("radicand out of range");
    return Scalar::quad(detail::json_rational_pair(q["a"]), detail::json_rational_pair(q["b"]), rad.get_si());
  }
  throw ParseError("unknown scalar encoding " + j.dump());
}

inline Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_json(c));
  return out;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("point must be an array, got " + j.dump());
  Point p;
  for (const auto& c : j) p.push_back(scalar_from_json(c));
  return p;
}

inline Json to_json(const Region& r) {
  if (r.is<Simplex>()) return {{"simplex", r.dimension()}};
  if (r.is<Cube>()) return {{"cube", r.dimension()}};
  if (r.is<UnitDisc>()) return {{"disc", true}};
  Json verts = Json::array();
  for (const auto& v : r.as<Polygon>().vertices()) verts.push_back(to_json(v));
  return {{"polygon", verts}};
}

inline Region region_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("region must be an object with one key, got " + j.dump());
  auto dim = [](const Json& v) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 64)
      throw InvalidRegion("region dimension must be an integer in 1..64");
    return static_cast<unsigned>(v.get<long long>());
  };
  if (j.contains("simplex")) return Simplex{dim(j["simplex"])};
  if (j.contains("cube")) return Cube{dim(j["cube"])};
  if (j.contains("disc")) return UnitDisc{};
  if (j.contains("polygon")) {
    const Json& vs = j["polygon"];
    if (!vs.is_array()) throw ParseError("polygon must be an array of points");
    std::vector<Point> verts;
    for (const auto& v : vs) {
      if (!v.is_array()) throw ParseError("polygon vertex must be an array");
      Point p;
      // plain numbers and integer strings are accepted for hand-written files
      for (const auto& c : v) {
        if (c.is_object()) p.push_back(scalar_from_json(c));
        else if (c.is_string()) p.push_back(parse_scalar(c.get<std::string>()));
        else if (c.is_number_integer()) p.push_back(Scalar(Rational(detail::json_integer(c), BigInt(1))));
        else throw ParseError("polygon coordinate must be exact, got " + c.dump());
      }
      verts.push_back(std::move(p));
    }
    return Polygon(std::move(verts));
  }
  throw ParseError("unknown region encoding " + j.dump());
}

inline Json to_json(const CubatureRule& rule) {
  Json nodes = Json::array();
  Json weights = Json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    nodes.push_back(to_json(rule.nodes()[i]));
    weights.push_back(to_json(rule.weights()[i]));
  }
  return {{"label", rule.label()}, {"region", to_json(rule.region())}, {"nodes", nodes}, {"weights", weights}};
}

inline CubatureRule rule_from_json(const Json& j) {
  for (const char* key : {"label", "region", "nodes", "weights"})
    if (!j.contains(key)) throw ParseError(std::string("rule JSON lacks \"") + key + "\"");
  std::vector<Point> nodes;
  for (const auto& n : j["nodes"]) nodes.push_back(point_from_json(n));
  std::vector<Scalar> weights;
  for (const auto& w : j["weights"]) weights.push_back(scalar_from_json(w));
  return {region_from_json(j["region"]), std::move(nodes), std::move(weights), j["label"].get<std::string>()};
}

inline Json to_json(const ExactnessReport& r) {
  Json out{{"label", r.label}, {"degree", r.degree}, {"tested", r.tested}};
  out["failing"] = r.failing ? Json(r.failing->exponents()) : Json(nullptr);
  out["residual"] = r.failing_residual ? to_json(*r.failing_residual) : Json(nullptr);
  return out;
}

inline ExactnessReport report_from_json(const Json& j) {
  ExactnessReport r;
  r.label = j.at("label").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.tested = j.at("tested").get<int>();
  if (!j.at("failing").is_null()) r.failing = MultiIndex(j["failing"].get<std::vector<unsigned>>());
  if (!j.at("residual").is_null()) r.failing_residual = scalar_from_json(j["residual"]);
  return r;
}

}  // namespace simpson
