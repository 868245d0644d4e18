// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/exactnum/matrix.hpp"

// Reference computations that share no code path with the library: a
// different floating-point backend, different formulas, different
// algorithms. Tests compare the library against these.
namespace oracle {

using F = boost::multiprecision::cpp_bin_float_100;

/// zeta'(-1) = 1/12 - (gamma + log 2 pi)/12 + zeta'(2) / (2 pi^2), with
/// zeta'(2) from a five-point difference of boost::math::zeta.
F zeta_prime_minus_one();

/// Archimedean local height (no discriminant term) of a point on the
/// identity component of y^2 = x^3 + a x + b, from the q-expansion of the
/// Weierstrass sigma function. Periods and the elliptic logarithm come from
/// double-exponential quadrature.
F qseries_local_height(long a, long b, const scattering::RationalPoint& p);

/// 4^-n log max(|num|, |den|) of x(2^n P): the defining limit, truncated.
/// Error O(4^-n); only good to a few digits.
double duplication_height(const scattering::EllipticCurve& e, const scattering::RationalPoint& p, int n);

/// i_p(P, Q) = i_p(O, Q - P) = max(0, -v_p(x(Q - P)) / 2) on a minimal
/// model: translation is an automorphism of the smooth locus.
int translation_intersection(const scattering::EllipticCurve& e, const scattering::RationalPoint& p,
                             const scattering::RationalPoint& q, long prime);

/// Rank by fraction-free Bareiss elimination on the cleared-denominator
/// integer matrix.
std::size_t bareiss_rank(const scattering::RationalMatrix& a);

/// Parses a decimal string into F.
F parse(const std::string& s);

}  // namespace oracle
