// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <string>

#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/exactnum/numeric.hpp"
#include "scattering/model/fiber.hpp"
#include "scattering/pairing/divisor.hpp"

namespace scattering {

/// Canonical height in the normalisation lim 4^-n h(x(2^n P)) with
/// h(a/b) = log max(|a|, |b|); this is twice the value of Silverman's
/// normalisation.
struct HeightValue {
  Real value = 0;
  int digits = 0;
};

/// Archimedean local height (Silverman normalisation, no discriminant term)
/// by Tate's series on an x-shift placing every real point at x >= 1.
/// Throws PrecisionError if the series fails to settle.
Real archimedean_local_height(const EllipticCurve& e, const RationalPoint& p,
                              const PrecisionContext& ctx);

/// Correction, as a multiple of log p in the doubled normalisation, for a
/// point on component `id` of the fibre.
Rational component_correction(const FiberConfiguration& fiber, int id);

/// Torsion points and O have height 0, decided exactly. Otherwise the sum of
/// local heights on a global minimal model.
HeightValue canonical_height(const EllipticCurve& e, const RationalPoint& p,
                             const PrecisionContext& ctx);

/// <D, D'> as an integer multiple of the height of the generator, given
/// S = m_S * generator for every label. Throws InvalidInput for a label
/// without a multiple.
long nt_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                const std::map<std::string, long>& multiples);

}  // namespace scattering
