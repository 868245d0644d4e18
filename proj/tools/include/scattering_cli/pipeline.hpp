// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scattering/cusps/dessin.hpp"
#include "scattering/cusps/relations.hpp"
#include "scattering/height/canonical_height.hpp"
#include "scattering/model/regular_model.hpp"
#include "scattering/solver/scattering.hpp"
#include "scattering_cli/config.hpp"

namespace scattering::cli {

/// Curve and cusps moved to a global minimal model, plus the structure
/// report on the input model.
struct Prepared {
  RunConfig config;
  EllipticCurve input_curve;
  EllipticCurve minimal;
  RationalPoint generator;
  std::vector<MarkedPoint> sections;
  CuspStructureReport structure;
};

Prepared prepare(const RunConfig& cfg);

struct IntersectionEntry {
  std::string a;
  std::string b;
  Integer prime;
  int value = 0;
};

struct PairingStage {
  std::vector<IntersectionEntry> intersections;
  std::vector<DeltaRow> deltas;
  /// Correction divisors Phi(D) for the first divisor of each row, at each
  /// prime with a reducible fibre.
  std::vector<std::vector<CorrectionDivisor>> corrections;
};

/// Nonzero i_p over all pairs of marked cusps and all primes.
std::vector<IntersectionEntry> marked_intersections(const RegularModel& model);
PairingStage run_pairing(const Prepared& p, const RegularModel& model);

struct HeightStage {
  HeightValue generator_height;
  /// <D, D'> / height(generator), one per delta row.
  std::vector<long> nt;
};

/// Needs the structure report's multiples; throws InvalidInput otherwise.
HeightStage run_heights(const Prepared& p, const PrecisionContext& ctx);

struct CuspStage {
  DessinData dessin;
  CuspClassData cusps;
  std::vector<LinearRelation> relations;
};

CuspStage run_cusps(const Prepared& p);

struct SolverStage {
  /// One master equation per delta row.
  std::vector<LinearRelation> masters;
  ScatteringTable table;
  std::optional<ScatteringTable> alternative;
  std::vector<NumericEntry> numeric;
};

std::vector<LinearRelation> pick(const std::vector<LinearRelation>& rows,
                                 const std::vector<std::size_t>& one_based);

SolverStage run_solver(const Prepared& p, const PairingStage& pairing, const HeightStage& heights,
                       const CuspStage& cusps, const PrecisionContext& ctx);

/// Every stage, in order.
struct FullRun {
  Prepared prepared;
  RegularModel model;
  PairingStage pairing;
  HeightStage heights;
  CuspStage cusps;
  SolverStage solver;
};

FullRun run_all(const RunConfig& cfg);

}  // namespace scattering::cli
