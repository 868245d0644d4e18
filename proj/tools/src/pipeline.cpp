// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering_cli/pipeline.hpp"

#include <set>

#include "scattering/curve/weierstrass.hpp"
#include "scattering/error.hpp"
#include "scattering/pairing/local_intersection.hpp"

namespace scattering::cli {

Prepared prepare(const RunConfig& cfg) {
  EllipticCurve input = cfg.curve();
  TransformedCurve m = minimal_model(input);
  std::vector<MarkedPoint> sections;
  for (const auto& s : cfg.cusps) sections.push_back({s.label, m.transform.apply(s.point)});
  return {cfg, input, m.curve, m.transform.apply(cfg.generator), sections,
          verify_cusp_structure(input, cfg.beta, cfg.generator, cfg.cusps)};
}

std::vector<IntersectionEntry> marked_intersections(const RegularModel& model) {
  std::vector<IntersectionEntry> out;
  const auto& s = model.sections;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::set<Integer> primes;
      for (const auto& p : model.bad_primes()) primes.insert(p);
      for (const auto& p : meeting_primes(s[i].point, s[j].point)) primes.insert(p);
      for (const auto& p : primes) {
        int m = local_intersection(model, s[i].label, s[j].label, p);
        if (m != 0) out.push_back({s[i].label, s[j].label, p, m});
      }
    }
  }
  return out;
}

PairingStage run_pairing(const Prepared& p, const RegularModel& model) {
  PairingStage st;
  st.intersections = marked_intersections(model);
  st.deltas = delta_table(model, p.config.delta_pairs);
  for (const auto& row : st.deltas) {
    std::vector<CorrectionDivisor> phis;
    for (const auto& [prime, fiber] : model.fibers) {
      if (fiber.size() < 2) continue;
      phis.push_back(correction_divisor(row.d, fiber, model.section_maps.at(prime)));
    }
    st.corrections.push_back(phis);
  }
  return st;
}

HeightStage run_heights(const Prepared& p, const PrecisionContext& ctx) {
  if (!p.structure.ok()) throw InvalidInput("height", "cusp structure checks failed; multiples unavailable");
  HeightStage st;
  st.generator_height = canonical_height(p.minimal, p.generator, ctx);
  for (const auto& [d, dp] : p.config.delta_pairs) st.nt.push_back(nt_pairing(d, dp, p.structure.multiples));
  return st;
}

CuspStage run_cusps(const Prepared& p) {
  CuspStage st;
  st.dessin = DessinData::parse(p.config.degree, p.config.sigma0, p.config.sigma1);
  st.cusps = cusp_data(st.dessin, label_hints(p.structure));
  st.relations = generate_relations(st.cusps);
  return st;
}

std::vector<LinearRelation> pick(const std::vector<LinearRelation>& rows,
                                 const std::vector<std::size_t>& one_based) {
  std::vector<LinearRelation> out;
  for (std::size_t r : one_based) {
    if (r < 1 || r > rows.size()) throw InvalidInput("solver", "row " + std::to_string(r) + " out of range");
    out.push_back(rows[r - 1]);
  }
  return out;
}

SolverStage run_solver(const Prepared& p, const PairingStage& pairing, const HeightStage& heights,
                       const CuspStage& cusps, const PrecisionContext& ctx) {
  SolverStage st;
  for (std::size_t i = 0; i < pairing.deltas.size(); ++i) {
    const auto& row = pairing.deltas[i];
    st.masters.push_back(master_equation(row.d, row.dp, row.result, heights.nt[i]));
  }
  auto labels = cusps.cusps.labels();
  st.table = solve_all(labels, cusps.relations, pick(st.masters, p.config.master_rows));
  if (!p.config.alternative_rows.empty())
    st.alternative = solve_all(labels, cusps.relations, pick(st.masters, p.config.alternative_rows));
  st.numeric = numeric_table(st.table, heights.generator_height.value, ctx);
  return st;
}

FullRun run_all(const RunConfig& cfg) {
  PrecisionContext ctx(cfg.digits);
  Prepared p = prepare(cfg);
  RegularModel model = build_regular_model(p.minimal, p.sections);
  PairingStage pairing = run_pairing(p, model);
  HeightStage heights = run_heights(p, ctx);
  CuspStage cusps = run_cusps(p);
  SolverStage solver = run_solver(p, pairing, heights, cusps, ctx);
  return {std::move(p), std::move(model), std::move(pairing), std::move(heights), std::move(cusps),
          std::move(solver)};
}

}  // namespace scattering::cli
