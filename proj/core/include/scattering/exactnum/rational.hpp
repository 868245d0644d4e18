// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "scattering/exactnum/integer.hpp"

namespace scattering {

/// Exact rational. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// n/d in lowest terms; throws InvalidInput when d == 0.
Rational make_rational(const Integer& n, const Integer& d = 1);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// v_p(q) = v_p(num) - v_p(den); kInfiniteValuation for zero.
int valuation(const Rational& q, const Integer& p);

Integer floor(const Rational& q);

}  // namespace scattering
