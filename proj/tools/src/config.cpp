// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "scattering/error.hpp"
#include "scattering/exactnum/numeric.hpp"

namespace scattering::cli {

namespace {

const std::string kDefault = R"json({
  "curve": ["0", "0", "0", "5", "10"],
  "generator": ["1", "4"],
  "cusps": [
    {"label": "S0", "point": "O"},
    {"label": "S1", "point": ["1", "4"]},
    {"label": "S2", "point": ["6", "-16"]},
    {"label": "S3", "point": ["1", "-4"]},
    {"label": "S4", "point": ["6", "16"]}
  ],
  "belyi": {
    "numerator": [[1, 1, "1"], [0, 1, "-5"], [0, 0, "16"]],
    "denominator": [[0, 0, "32"]]
  },
  "dessin": {"degree": 5, "sigma0": "(1235)", "sigma1": "(1234)"},
  "delta_pairs": [
    ["S1-S4", "S3-S2"], ["S1-S3", "S4-S2"], ["S1-S2", "S3-S4"], ["S1-S4", "S3-S0"],
    ["S1-S3", "S4-S0"], ["S1-S0", "S3-S4"], ["S1-S4", "S0-S2"], ["S1-S2", "S0-S4"]
  ],
  "master_rows": [8, 7, 5],
  "alternative_rows": [1, 2, 4],
  "digits": 20,
  "format": "table"
})json";

const Json& need(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput("cli", std::string("config: missing '") + key + "'");
  return j.at(key);
}

std::vector<std::size_t> rows_from(const Json& j, std::size_t n, const char* what) {
  std::vector<std::size_t> rows;
  for (const auto& r : j) {
    if (!r.is_number_integer() || r.get<long>() < 1 || static_cast<std::size_t>(r.get<long>()) > n)
      throw InvalidInput("cli", std::string("config: ") + what + " entry " + r.dump() + " outside 1.." +
                                    std::to_string(n));
    rows.push_back(r.get<std::size_t>());
  }
  return rows;
}

}  // namespace

EllipticCurve RunConfig::curve() const {
  const auto& a = coefficients;
  return EllipticCurve(a[0], a[1], a[2], a[3], a[4]);
}

const std::string& default_config_text() { return kDefault; }

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("cli", "config must be a JSON object");
  RunConfig c;
  const Json& curve = need(j, "curve");
  if (!curve.is_array() || curve.size() != 5)
    throw InvalidInput("cli", "config: 'curve' must list a1, a2, a3, a4, a6");
  for (std::size_t i = 0; i < 5; ++i) c.coefficients[i] = rational_from_json(curve[i]);
  EllipticCurve e = c.curve();

  c.generator = point_from_json(need(j, "generator"));
  if (!e.contains(c.generator)) throw InvalidInput("cli", "config: generator " + to_string(c.generator) + " is not on " + to_string(e));

  std::set<std::string> seen;
  for (const auto& m : need(j, "cusps")) {
    MarkedPoint mp{need(m, "label").get<std::string>(), point_from_json(need(m, "point"))};
    if (!seen.insert(mp.label).second) throw InvalidInput("cli", "config: duplicate cusp label " + mp.label);
    if (!e.contains(mp.point))
      throw InvalidInput("cli", "config: cusp " + mp.label + " = " + to_string(mp.point) + " is not on " + to_string(e));
    c.cusps.push_back(mp);
  }

  const Json& beta = need(j, "belyi");
  c.beta.numerator = polynomial_from_json(need(beta, "numerator"));
  c.beta.denominator = polynomial_from_json(need(beta, "denominator"));

  const Json& dessin = need(j, "dessin");
  c.degree = need(dessin, "degree").get<int>();
  c.sigma0 = need(dessin, "sigma0").get<std::string>();
  c.sigma1 = need(dessin, "sigma1").get<std::string>();

  for (const auto& p : need(j, "delta_pairs")) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("cli", "config: delta pair must be [D, D']");
    DivisorPair dp{CuspidalDivisor::parse(p[0].get<std::string>()), CuspidalDivisor::parse(p[1].get<std::string>())};
    for (const auto* d : {&dp.first, &dp.second})
      for (const auto& l : d->support())
        if (!seen.count(l)) throw InvalidInput("cli", "config: divisor mentions unknown cusp " + l);
    c.delta_pairs.push_back(dp);
  }
  c.master_rows = rows_from(need(j, "master_rows"), c.delta_pairs.size(), "master_rows");
  if (j.contains("alternative_rows"))
    c.alternative_rows = rows_from(j.at("alternative_rows"), c.delta_pairs.size(), "alternative_rows");

  if (j.contains("digits")) c.digits = j.at("digits").get<int>();
  PrecisionContext check(c.digits);
  if (j.contains("format")) {
    auto f = j.at("format").get<std::string>();
    if (f == "table") {
      c.format = OutputFormat::kTable;
    } else if (f == "json") {
      c.format = OutputFormat::kJson;
    } else {
      throw InvalidInput("cli", "config: format must be table or json");
    }
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json curve = Json::array();
  for (const auto& a : c.coefficients) curve.push_back(to_string(a));
  Json cusps = Json::array();
  for (const auto& m : c.cusps) cusps.push_back({{"label", m.label}, {"point", point_to_json(m.point)}});
  Json pairs = Json::array();
  for (const auto& [d, dp] : c.delta_pairs) pairs.push_back({to_string(d), to_string(dp)});
  Json out = {{"curve", curve},
              {"generator", point_to_json(c.generator)},
              {"cusps", cusps},
              {"belyi", {{"numerator", polynomial_to_json(c.beta.numerator)},
                         {"denominator", polynomial_to_json(c.beta.denominator)}}},
              {"dessin", {{"degree", c.degree}, {"sigma0", c.sigma0}, {"sigma1", c.sigma1}}},
              {"delta_pairs", pairs},
              {"master_rows", c.master_rows},
              {"alternative_rows", c.alternative_rows},
              {"digits", c.digits},
              {"format", c.format == OutputFormat::kJson ? "json" : "table"}};
  return out;
}

RunConfig default_config() { return config_from_json(Json::parse(kDefault)); }

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cli", "cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput("cli", "config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace scattering::cli
