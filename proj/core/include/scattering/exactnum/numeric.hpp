// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "scattering/exactnum/symbolic.hpp"

namespace scattering {

/// Fixed 120-digit MPFR real. Fixed precision keeps the type free of the
/// process-wide default-precision state of the variable-precision backend.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                           boost::multiprecision::et_off>;

inline constexpr int kMinDigits = 16;
inline constexpr int kMaxDigits = 100;

/// Requested number of correct decimal digits for numeric evaluation.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits = 20);

  int digits() const { return digits_; }
  /// 10^-digits.
  Real epsilon() const;
  /// Same context with more digits, clamped to kMaxDigits.
  PrecisionContext raised(int extra) const;

 private:
  int digits_;
};

Real pi();
Real from_rational(const Rational& q);

/// zeta'(-1) by Euler-Maclaurin summation of zeta'(s) at s = -1. Retries
/// with a longer head sum until two successive evaluations agree; throws
/// PrecisionError after four attempts.
Real zeta_prime_minus_one(const PrecisionContext& ctx);

/// Scattering constant of the full modular group:
/// -(6/pi)(12 zeta'(-1) - 1 + log(4 pi)).
Real c1_value(const PrecisionContext& ctx);

/// Numeric values for the basis symbols that are not closed-form.
struct NumericBasis {
  Real c1;
  /// Canonical height of the generator (not divided by pi).
  Real height;
};

NumericBasis make_basis(const Real& height, const PrecisionContext& ctx);

/// Sum of coeff * value over the terms of c.
Real eval_numeric(const SymbolicConstant& c, const NumericBasis& basis);

/// Decimal rendering with the given number of significant digits.
std::string format_real(const Real& x, int digits);

}  // namespace scattering
