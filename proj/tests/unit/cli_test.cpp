// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "scattering/error.hpp"
#include "scattering_cli/commands.hpp"
#include "scattering_cli/config.hpp"
#include "scattering_cli/golden.hpp"
#include "scattering_cli/json_io.hpp"
#include "scattering_cli/pipeline.hpp"

namespace scattering::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const FullRun& default_run() {
  static const FullRun r = run_all(default_config());
  return r;
}

TEST(Config, RoundTrip) {
  RunConfig c = default_config();
  Json j = config_to_json(c);
  EXPECT_EQ(config_to_json(config_from_json(j)), j);
  EXPECT_EQ(config_to_json(config_from_json(Json::parse(default_config_text()))), j);
  EXPECT_EQ(c.master_rows, (std::vector<std::size_t>{8, 7, 5}));
}

TEST(Config, Validation) {
  Json j = config_to_json(default_config());
  Json bad = j;
  bad["generator"] = {"1", "5"};
  EXPECT_THROW(config_from_json(bad), scattering::InvalidInput);
  bad = j;
  bad["digits"] = 101;
  EXPECT_THROW(config_from_json(bad), scattering::InvalidInput);
  bad = j;
  bad["master_rows"] = {1, 2, 9};
  EXPECT_THROW(config_from_json(bad), scattering::InvalidInput);
  EXPECT_THROW(load_config_file("/nonexistent/config.json"), scattering::InvalidInput);
}

TEST(JsonIo, ScalarRoundTrips) {
  for (const Rational& q : {Rational(0), make_rational(-7, 3), make_rational(Integer("12345678901234567"), 2)})
    EXPECT_EQ(rational_from_json(rational_to_json(q)), q);
  EXPECT_EQ(rational_to_json(make_rational(6, -4)), "-3/2");
  for (const RationalPoint& p : {RationalPoint(), RationalPoint(make_rational(481, 1024), make_rational(115631, 32768))})
    EXPECT_EQ(point_from_json(point_to_json(p)), p);
  SymbolicConstant s = default_run().solver.table.at("S2", "S4");
  EXPECT_EQ(symbolic_from_json(symbolic_to_json(s)), s);
  EXPECT_THROW(rational_from_json(Json("1/0")), scattering::InvalidInput);
}

TEST(JsonIo, ArtifactRoundTrips) {
  const FullRun& r = default_run();
  for (const auto& [p, f] : r.model.fibers) {
    EXPECT_EQ(fiber_to_json(fiber_from_json(fiber_to_json(f))), fiber_to_json(f));
    const auto& sm = r.model.section_maps.at(p);
    EXPECT_EQ(section_map_from_json(section_map_to_json(sm)), sm);
  }
  for (const auto& row : r.pairing.corrections)
    for (const auto& c : row) EXPECT_EQ(correction_from_json(correction_to_json(c)), c);
  for (const auto& d : r.pairing.deltas) EXPECT_EQ(pairing_from_json(pairing_to_json(d.result)), d.result);
  for (const auto& rel : r.cusps.relations) EXPECT_EQ(relation_from_json(relation_to_json(rel)), rel);
  EXPECT_EQ(cusps_to_json(cusps_from_json(cusps_to_json(r.cusps.cusps))), cusps_to_json(r.cusps.cusps));
  EXPECT_EQ(table_from_json(table_to_json(r.solver.table, r.solver.numeric)), r.solver.table);
  auto checks = golden_checks(r);
  EXPECT_EQ(checks_to_json(checks_from_json(checks_to_json(checks))), checks_to_json(checks));
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(r.prepared.config.beta.numerator)),
            r.prepared.config.beta.numerator);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify"}).code, kExitOk);
  EXPECT_EQ(run({"scattering", "--digits", "5"}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"model", "--config", "/nonexistent.json"}).code, kExitInputError);
  EXPECT_EQ(run({"model", "--config", write_temp("garbage.json", "{not json")}).code, kExitInputError);
  EXPECT_EQ(run({"--print-default-config"}).code, kExitOk);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("scattering"), std::string::npos);
}

TEST(Cli, EverySubcommandSucceedsInBothFormats) {
  for (const char* sub : {"model", "pairing", "heights", "cusps", "scattering", "verify"}) {
    auto t = run({sub});
    EXPECT_EQ(t.code, kExitOk) << sub << t.err;
    auto j = run({sub, "--format", "json"});
    EXPECT_EQ(j.code, kExitOk) << sub << j.err;
    EXPECT_TRUE(Json::accept(j.out)) << sub;
  }
}

TEST(Cli, OutputIsByteStable) {
  auto a = run({"scattering", "--format", "json"});
  auto b = run({"scattering", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"pairing"}).out, run({"pairing"}).out);
}

TEST(Cli, HigherPrecisionKeepsLeadingDigits) {
  Json lo = Json::parse(run({"scattering", "--format", "json"}).out);
  Json hi = Json::parse(run({"scattering", "--format", "json", "--digits", "30"}).out);
  const auto& le = lo["table"]["entries"];
  const auto& he = hi["table"]["entries"];
  ASSERT_EQ(le.size(), he.size());
  for (std::size_t i = 0; i < le.size(); ++i) {
    double a = std::stod(le[i]["numeric"].get<std::string>());
    double b = std::stod(he[i]["numeric"].get<std::string>());
    EXPECT_NEAR(a, b, 1e-13);
  }
}

TEST(Cli, DefaultConfigFileBehavesLikeBuiltIn) {
  std::string path = write_temp("default.json", default_config_text());
  EXPECT_EQ(run({"scattering", "--config", path}).out, run({"scattering"}).out);
}

TEST(Cli, WrongCuspFailsStructureCheck) {
  Json j = config_to_json(default_config());
  for (auto& c : j["cusps"])
    if (c["label"] == "S4") c["point"] = {"-1", "-2"};
  auto r = run({"scattering", "--config", write_temp("bad.json", j.dump())});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.out << r.err;
}

}  // namespace
}  // namespace scattering::cli
