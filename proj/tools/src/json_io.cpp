// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering_cli/json_io.hpp"

#include <algorithm>

#include "scattering/error.hpp"

namespace scattering::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput("cli", std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("cli", "expected a rational string, got " + j.dump());
}

Json point_to_json(const RationalPoint& p) {
  if (p.is_infinity()) return "O";
  return Json::array({to_string(p.x()), to_string(p.y())});
}

RationalPoint point_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return {};
  if (!j.is_array() || j.size() != 2) throw InvalidInput("cli", "expected \"O\" or [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json polynomial_to_json(const BivariatePolynomial& f) {
  Json out = Json::array();
  for (const auto& [ij, c] : f) out.push_back(Json::array({ij.first, ij.second, to_string(c)}));
  return out;
}

BivariatePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("cli", "polynomial must be a list of [i, j, c] terms");
  BivariatePolynomial f;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw InvalidInput("cli", "bad polynomial term " + t.dump());
    f[{t[0].get<int>(), t[1].get<int>()}] += rational_from_json(t[2]);
  }
  return f;
}

Json symbolic_to_json(const SymbolicConstant& c) {
  Json out = Json::object();
  for (const auto& [s, q] : c.terms()) out[to_string(s)] = to_string(q);
  return out;
}

SymbolicConstant symbolic_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("cli", "symbolic constant must be an object");
  SymbolicConstant c;
  for (const auto& [k, v] : j.items()) c.add(parse_symbol(k), rational_from_json(v));
  return c;
}

Json fiber_to_json(const FiberConfiguration& f) {
  Json comps = Json::array();
  for (const auto& c : f.components)
    comps.push_back({{"id", c.id}, {"multiplicity", c.multiplicity}, {"residue_degree", c.residue_degree}});
  return {{"prime", to_string(f.prime)},
          {"type", to_string(f.type)},
          {"split", f.split},
          {"components", comps},
          {"intersection", f.intersection},
          {"identity", f.identity_id},
          {"tamagawa", f.tamagawa},
          {"conductor_exponent", f.conductor_exponent}};
}

FiberConfiguration fiber_from_json(const Json& j) {
  FiberConfiguration f;
  f.prime = Integer(field(j, "prime").get<std::string>());
  f.type = KodairaType::parse(field(j, "type").get<std::string>());
  f.split = field(j, "split").get<bool>();
  for (const auto& c : field(j, "components"))
    f.components.push_back({c.at("id").get<int>(), c.at("multiplicity").get<int>(),
                            c.at("residue_degree").get<int>()});
  f.intersection = field(j, "intersection").get<std::vector<std::vector<long>>>();
  f.identity_id = field(j, "identity").get<int>();
  f.tamagawa = field(j, "tamagawa").get<int>();
  f.conductor_exponent = field(j, "conductor_exponent").get<int>();
  return f;
}

Json section_map_to_json(const SectionComponentMap& m) {
  Json comps = Json::object();
  for (const auto& [l, id] : m.components) comps[l] = id;
  return {{"prime", to_string(m.prime)}, {"components", comps}};
}

SectionComponentMap section_map_from_json(const Json& j) {
  SectionComponentMap m;
  m.prime = Integer(field(j, "prime").get<std::string>());
  for (const auto& [l, id] : field(j, "components").items()) m.components[l] = id.get<int>();
  return m;
}

Json correction_to_json(const CorrectionDivisor& c) {
  Json coeffs = Json::object();
  for (const auto& [id, q] : c.coeffs) coeffs["C" + std::to_string(id)] = to_string(q);
  return {{"prime", to_string(c.prime)}, {"coefficients", coeffs}};
}

CorrectionDivisor correction_from_json(const Json& j) {
  CorrectionDivisor c;
  c.prime = Integer(field(j, "prime").get<std::string>());
  for (const auto& [k, v] : field(j, "coefficients").items()) {
    if (k.size() < 2 || k[0] != 'C') throw InvalidInput("cli", "bad component key " + k);
    c.coeffs[std::stoi(k.substr(1))] = rational_from_json(v);
  }
  return c;
}

Json pairing_to_json(const FinitePairingResult& r) {
  Json out = Json::object();
  for (const auto& [p, d] : r.delta) out[to_string(p)] = to_string(d);
  return out;
}

FinitePairingResult pairing_from_json(const Json& j) {
  FinitePairingResult r;
  for (const auto& [p, d] : j.items()) r.delta[Integer(p)] = rational_from_json(d);
  return r;
}

Json relation_to_json(const LinearRelation& r) {
  Json lhs = Json::array();
  for (const auto& [k, q] : r.lhs) lhs.push_back({{"a", k.first}, {"b", k.second}, {"coeff", to_string(q)}});
  return {{"lhs", lhs}, {"rhs", symbolic_to_json(r.rhs)}, {"origin", r.origin}, {"text", to_string(r)}};
}

LinearRelation relation_from_json(const Json& j) {
  LinearRelation r;
  for (const auto& t : field(j, "lhs"))
    r.add(UnknownKey::of(t.at("a").get<std::string>(), t.at("b").get<std::string>()),
          rational_from_json(t.at("coeff")));
  r.rhs = symbolic_from_json(field(j, "rhs"));
  if (j.contains("origin")) r.origin = j.at("origin").get<std::string>();
  return r;
}

Json cusps_to_json(const CuspClassData& c) {
  Json list = Json::array();
  for (const auto& k : c.cusps)
    list.push_back({{"label", k.label}, {"class", to_string(k.cls)}, {"width", k.width}, {"cycle", k.cycle}});
  return {{"index", c.index}, {"cusps", list}};
}

CuspClassData cusps_from_json(const Json& j) {
  CuspClassData c;
  c.index = field(j, "index").get<int>();
  for (const auto& k : field(j, "cusps")) {
    Cusp cu;
    cu.label = k.at("label").get<std::string>();
    auto cls = k.at("class").get<std::string>();
    if (cls == "inf") {
      cu.cls = Gamma2Class::kInfinity;
    } else if (cls == "zero") {
      cu.cls = Gamma2Class::kZero;
    } else if (cls == "one") {
      cu.cls = Gamma2Class::kOne;
    } else {
      throw InvalidInput("cli", "unknown cusp class " + cls);
    }
    cu.width = k.at("width").get<int>();
    cu.cycle = k.at("cycle").get<std::vector<int>>();
    c.cusps.push_back(cu);
  }
  return c;
}

Json table_to_json(const ScatteringTable& t, const std::vector<NumericEntry>& numeric, int digits) {
  Json entries = Json::array();
  for (const auto& [k, c] : t.entries()) {
    Json e = {{"i", t.index_of(k.first)}, {"j", t.index_of(k.second)}, {"symbolic", symbolic_to_json(c)}};
    auto it = std::find_if(numeric.begin(), numeric.end(),
                           [&](const NumericEntry& n) { return n.a == k.first && n.b == k.second; });
    if (it != numeric.end()) e["numeric"] = format_real(it->value, digits);
    entries.push_back(e);
  }
  return {{"labels", t.labels()}, {"entries", entries}};
}

ScatteringTable table_from_json(const Json& j) {
  ScatteringTable t(field(j, "labels").get<std::vector<std::string>>());
  for (const auto& e : field(j, "entries")) {
    auto i = e.at("i").get<std::size_t>();
    auto k = e.at("j").get<std::size_t>();
    if (i >= t.labels().size() || k >= t.labels().size()) throw InvalidInput("cli", "table index out of range");
    t.set(t.labels()[i], t.labels()[k], symbolic_from_json(e.at("symbolic")));
  }
  return t;
}

}  // namespace scattering::cli
