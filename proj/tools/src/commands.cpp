// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering_cli/commands.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>

#include "scattering/error.hpp"

namespace scattering::cli {

namespace {

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

void print_fiber_table(std::ostream& out, const FiberConfiguration& f) {
  out << "  p = " << to_string(f.prime) << ": " << to_string(f.type) << ", c_p = " << f.tamagawa
      << ", f_p = " << f.conductor_exponent << (f.type.family == KodairaType::Family::kI && f.type.n > 0
                                                    ? (f.split ? ", split" : ", non-split")
                                                    : "")
      << "\n";
  if (f.size() < 2) return;
  out << "    components:";
  for (const auto& c : f.components) out << " " << c.multiplicity << "C" << c.id;
  out << "\n    scaled intersection matrix:\n";
  auto m = f.scaled_intersection();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "     ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << std::setw(4) << to_string(m(i, j));
    out << "\n";
  }
}

}  // namespace

Json model_report(const Prepared& p, const RegularModel& m) {
  Json fibers = Json::array();
  for (const auto& [prime, f] : m.fibers) fibers.push_back(fiber_to_json(f));
  Json maps = Json::array();
  for (const auto& [prime, s] : m.section_maps) maps.push_back(section_map_to_json(s));
  Json primes = Json::array();
  for (const auto& q : m.bad_primes()) primes.push_back(to_string(q));
  Json coeffs = Json::array();
  for (const auto& a : m.curve.coefficients()) coeffs.push_back(to_string(a));
  return {{"input_curve", to_string(p.input_curve)},
          {"minimal_curve", coeffs},
          {"discriminant", to_string(m.curve.discriminant())},
          {"bad_primes", primes},
          {"fibers", fibers},
          {"section_components", maps}};
}

Json pairing_report(const PairingStage& s) {
  Json inter = Json::array();
  for (const auto& e : s.intersections)
    inter.push_back({{"a", e.a}, {"b", e.b}, {"prime", to_string(e.prime)}, {"value", e.value}});
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.deltas.size(); ++i) {
    Json phis = Json::array();
    for (const auto& c : s.corrections[i]) phis.push_back(correction_to_json(c));
    rows.push_back({{"d", to_string(s.deltas[i].d)},
                    {"d_prime", to_string(s.deltas[i].dp)},
                    {"delta", pairing_to_json(s.deltas[i].result)},
                    {"correction", phis}});
  }
  return {{"intersections", inter}, {"delta_table", rows}};
}

Json heights_report(const Prepared& p, const HeightStage& s, int digits) {
  Json mult = Json::object();
  for (const auto& [l, m] : p.structure.multiples) mult[l] = m;
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.nt.size(); ++i) {
    const auto& [d, dp] = p.config.delta_pairs[i];
    rows.push_back({{"d", to_string(d)}, {"d_prime", to_string(dp)}, {"multiple", s.nt[i]}});
  }
  return {{"generator", point_to_json(p.config.generator)},
          {"height", format_real(s.generator_height.value, digits)},
          {"digits", s.generator_height.digits},
          {"multiples", mult},
          {"pairings", rows}};
}

Json cusps_report(const CuspStage& s) {
  Json rels = Json::array();
  for (const auto& r : s.relations) rels.push_back(relation_to_json(r));
  return {{"sigma0", to_string(s.dessin.sigma0)},
          {"sigma1", to_string(s.dessin.sigma1)},
          {"sigma_inf", to_string(s.dessin.sigma_infinity())},
          {"cusps", cusps_to_json(s.cusps)},
          {"relations", rels}};
}

Json scattering_report(const SolverStage& s, int digits) {
  Json masters = Json::array();
  for (const auto& r : s.masters) masters.push_back(relation_to_json(r));
  return {{"height_formulas", masters}, {"table", table_to_json(s.table, s.numeric, digits)}};
}

Json verify_report(const std::vector<Check>& checks) {
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  return {{"passed", all}, {"checks", checks_to_json(checks)}};
}

namespace {

struct Options {
  std::string config_path;
  std::optional<int> digits;
  std::optional<std::string> format;
};

RunConfig resolve(const Options& o) {
  RunConfig c = o.config_path.empty() ? default_config() : load_config_file(o.config_path);
  if (o.digits) {
    PrecisionContext check(*o.digits);
    c.digits = *o.digits;
  }
  if (o.format) c.format = *o.format == "json" ? OutputFormat::kJson : OutputFormat::kTable;
  return c;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Structure failures stop every stage that needs the Mordell-Weil data.
bool structure_ok(const Prepared& p, const RunConfig& c, std::ostream& out) {
  if (p.structure.ok()) return true;
  if (c.format == OutputFormat::kJson) {
    Json checks = Json::array();
    for (const auto& s : p.structure.checks)
      checks.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    emit_json(out, {{"passed", false}, {"structure", checks}});
  } else {
    out << "cusp structure checks failed:\n";
    for (const auto& s : p.structure.checks)
      if (!s.passed) out << "  FAIL " << s.name << ": " << s.detail << "\n";
  }
  return false;
}

int cmd_model(const RunConfig& c, std::ostream& out) {
  Prepared p = prepare(c);
  RegularModel m = build_regular_model(p.minimal, p.sections);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, model_report(p, m));
    return kExitOk;
  }
  out << "curve " << to_string(p.input_curve) << ", minimal model " << to_string(m.curve) << "\n";
  out << "discriminant " << to_string(m.curve.discriminant()) << "\n";
  out << "fibres:\n";
  for (const auto& [q, f] : m.fibers) print_fiber_table(out, f);
  out << "section components:\n";
  for (const auto& [q, s] : m.section_maps) {
    out << "  p = " << to_string(q) << ":";
    for (const auto& [l, id] : s.components) out << " " << l << "->C" << id;
    out << "\n";
  }
  return kExitOk;
}

int cmd_pairing(const RunConfig& c, std::ostream& out) {
  Prepared p = prepare(c);
  RegularModel m = build_regular_model(p.minimal, p.sections);
  PairingStage s = run_pairing(p, m);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, pairing_report(s));
    return kExitOk;
  }
  out << "nonzero local intersections:\n";
  for (const auto& e : s.intersections)
    out << "  i_" << to_string(e.prime) << "(" << e.a << ", " << e.b << ") = " << e.value << "\n";
  out << "finite pairing (D + Phi(D), D') = sum delta_p log p:\n";
  for (std::size_t i = 0; i < s.deltas.size(); ++i) {
    const auto& r = s.deltas[i];
    out << "  " << pad(to_string(r.d), 8) << pad(to_string(r.dp), 8);
    if (r.result.delta.empty()) out << " 0";
    for (const auto& [q, d] : r.result.delta) out << " delta_" << to_string(q) << " = " << pad(to_string(d), 6);
    out << "\n";
    for (const auto& phi : s.corrections[i]) {
      out << "      Phi at " << to_string(phi.prime) << ":";
      for (const auto& [id, v] : phi.coeffs)
        if (v != 0) out << " " << (v == 1 ? "" : v == -1 ? "-" : to_string(v) + "*") << "C" << id;
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_heights(const RunConfig& c, std::ostream& out) {
  Prepared p = prepare(c);
  if (!structure_ok(p, c, out)) return kExitCheckFailed;
  HeightStage s = run_heights(p, PrecisionContext(c.digits));
  if (c.format == OutputFormat::kJson) {
    emit_json(out, heights_report(p, s, c.digits));
    return kExitOk;
  }
  out << "height(" << to_string(c.generator) << ") = " << format_real(s.generator_height.value, c.digits) << "\n";
  out << "multiples of the generator:";
  for (const auto& [l, m] : p.structure.multiples) out << " " << l << "=" << m;
  out << "\n<D, D'> in units of the generator height:\n";
  for (std::size_t i = 0; i < s.nt.size(); ++i)
    out << "  " << pad(to_string(c.delta_pairs[i].first), 8) << pad(to_string(c.delta_pairs[i].second), 8) << " "
        << s.nt[i] << "\n";
  return kExitOk;
}

int cmd_cusps(const RunConfig& c, std::ostream& out) {
  Prepared p = prepare(c);
  CuspStage s = run_cusps(p);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, cusps_report(s));
    return kExitOk;
  }
  out << "index " << s.cusps.index << "\n";
  out << "sigma0 = " << to_string(s.dessin.sigma0) << ", sigma1 = " << to_string(s.dessin.sigma1)
      << ", sigma_inf = " << to_string(s.dessin.sigma_infinity()) << "\n";
  for (Gamma2Class cls : {Gamma2Class::kInfinity, Gamma2Class::kZero, Gamma2Class::kOne}) {
    out << "class " << pad(to_string(cls), 5) << ":";
    for (const auto& k : s.cusps.cusps)
      if (k.cls == cls) out << " " << k.label << " (width " << k.width << ")";
    out << "\n";
  }
  out << "relations:\n";
  for (const auto& r : s.relations) out << "  " << to_string(r) << "\n";
  return kExitOk;
}

int cmd_scattering(const RunConfig& c, std::ostream& out) {
  if (!structure_ok(prepare(c), c, out)) return kExitCheckFailed;
  FullRun r = run_all(c);
  if (c.format == OutputFormat::kJson) {
    emit_json(out, scattering_report(r.solver, c.digits));
    return kExitOk;
  }
  out << "C1 = " << format_real(c1_value(PrecisionContext(c.digits)), c.digits) << ", HNT = height / pi, LOGp = log(p) / pi\n";
  for (const auto& n : r.solver.numeric)
    out << "C(" << n.a << "," << n.b << ") = " << pad(to_string(r.solver.table.at(n.a, n.b)), 44) << " "
        << format_real(n.value, c.digits) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  Prepared p = prepare(c);
  if (!structure_ok(p, c, out)) return kExitCheckFailed;
  FullRun r = run_all(c);
  auto checks = golden_checks(r);
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.passed; });
  if (c.format == OutputFormat::kJson) {
    emit_json(out, verify_report(checks));
  } else {
    for (const auto& k : checks)
      out << (k.passed ? "PASS" : "FAIL") << " [" << k.group << "] " << k.name << "  (discrepancy " << k.discrepancy
          << ")\n";
    std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& k) { return k.passed; });
    out << passed << "/" << checks.size() << " checks passed\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering constants of the subgroup attached to an elliptic Belyi pair"};
  app.name("scattering");
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON run configuration (default: built-in 400H1 data)");
    sub->add_option("--digits", opt.digits, "decimal digits for numeric output (16..100)");
    sub->add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Sub subs[] = {{"model", "regular model: fibres and section components", cmd_model},
                      {"pairing", "local intersections, correction divisors, delta table", cmd_pairing},
                      {"heights", "canonical height of the generator and <D, D'> multiples", cmd_heights},
                      {"cusps", "cusp classes, widths and linear relations", cmd_cusps},
                      {"scattering", "symbolic and numeric scattering constants", cmd_scattering},
                      {"verify", "compare every artifact against the reference values", cmd_verify}};
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) {
    auto* h = app.add_subcommand(s.name, s.help);
    add_common(h);
    handles.push_back(h);
  }
  app.add_flag_callback("--print-default-config", [&] {
    out << default_config_text() << "\n";
    throw CLI::Success();
  }, "print the built-in configuration and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  try {
    RunConfig cfg = resolve(opt);
    for (std::size_t i = 0; i < handles.size(); ++i)
      if (handles[i]->parsed()) return subs[i].fn(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NonMinimalModel& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: cli: malformed config: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace scattering::cli
