// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace scattering {

using Integer = mpz_class;

/// Valuation reported for zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// p-adic valuation of n; kInfiniteValuation when n == 0.
int valuation(const Integer& n, const Integer& p);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m; throws InvalidInput if gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

bool is_prime(const Integer& n);

/// Prime factorisation of |n| (n != 0), primes ascending. Trial division
/// followed by Pollard-Brent for the cofactor.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

std::vector<Integer> prime_divisors(const Integer& n);

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace scattering
