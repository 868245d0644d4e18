// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <json.hpp>

#include "scattering/cusps/relations.hpp"
#include "scattering/curve/belyi.hpp"
#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/model/tate.hpp"
#include "scattering/pairing/finite_pairing.hpp"
#include "scattering/solver/scattering.hpp"

// Exact values travel as strings: "p/q" for rationals, never as JSON
// numbers. Every to_json has a from_json partner so documents round-trip.
namespace scattering::cli {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// "O" or ["x", "y"].
Json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);

/// [[i, j, "c"], ...] for c * x^i y^j.
Json polynomial_to_json(const BivariatePolynomial& f);
BivariatePolynomial polynomial_from_json(const Json& j);

/// {"C1": "1/30", "LOG2": "7/30", "HNT": "-2"}.
Json symbolic_to_json(const SymbolicConstant& c);
SymbolicConstant symbolic_from_json(const Json& j);

Json fiber_to_json(const FiberConfiguration& f);
FiberConfiguration fiber_from_json(const Json& j);

Json section_map_to_json(const SectionComponentMap& m);
SectionComponentMap section_map_from_json(const Json& j);

Json correction_to_json(const CorrectionDivisor& c);
CorrectionDivisor correction_from_json(const Json& j);

/// {"2": "25/4", "5": "-2"}.
Json pairing_to_json(const FinitePairingResult& r);
FinitePairingResult pairing_from_json(const Json& j);

Json relation_to_json(const LinearRelation& r);
LinearRelation relation_from_json(const Json& j);

Json cusps_to_json(const CuspClassData& c);
CuspClassData cusps_from_json(const Json& j);

/// {"labels": [...], "entries": [{"i", "j", "symbolic", "numeric"?}]}.
/// Numeric values are attached when `numeric` is non-empty.
Json table_to_json(const ScatteringTable& t, const std::vector<NumericEntry>& numeric = {},
                   int digits = 20);
ScatteringTable table_from_json(const Json& j);

}  // namespace scattering::cli
