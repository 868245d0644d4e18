// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/exactnum/numeric.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <sstream>

#include "scattering/error.hpp"

namespace scattering {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw InvalidInput("exactnum", "precision must lie in [" + std::to_string(kMinDigits) + ", " +
                                       std::to_string(kMaxDigits) + "] digits, got " +
                                       std::to_string(digits));
  }
}

Real PrecisionContext::epsilon() const { return pow(Real(10), -digits_); }

PrecisionContext PrecisionContext::raised(int extra) const {
  return PrecisionContext(std::min(kMaxDigits, digits_ + extra));
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real from_rational(const Rational& q) {
  Real n(q.get_num().get_str());
  Real d(q.get_den().get_str());
  return n / d;
}

namespace {

// Euler-Maclaurin with head length n; tail terms are added while they keep
// shrinking and stay above the target.
Real zeta_prime_em(long n, const Real& target, bool& converged) {
  Real sum = 0;
  for (long k = 2; k < n; ++k) {
    Real kk(k);
    sum -= kk * log(kk);
  }
  const Real N(n);
  const Real logn = log(N);
  sum += N * N * logn / 2 - N * N / 4 - N * logn / 2 + (1 + logn) / 12;

  // k >= 2: -B_{2k} (2k-3)! / (2k)! N^{2-2k}
  Real prev = -1;
  converged = false;
  Real npow = 1 / (N * N);
  for (int k = 2; k < 4000; ++k) {
    Real b = boost::math::bernoulli_b2n<Real>(k);
    Real ratio = 1;
    for (int j = 2 * k - 2; j <= 2 * k; ++j) ratio /= Real(j);
    Real term = b * ratio * npow;
    Real mag = abs(term);
    if (prev >= 0 && mag > prev) break;
    sum -= term;
    if (mag < target) {
      converged = true;
      break;
    }
    prev = mag;
    npow /= N * N;
  }
  return sum;
}

}  // namespace

Real zeta_prime_minus_one(const PrecisionContext& ctx) {
  const Real target = ctx.epsilon() / 10000;
  long n = 2L * ctx.digits() + 20;
  bool ok = false;
  Real last = zeta_prime_em(n, target, ok);
  for (int attempt = 0; attempt < 4; ++attempt) {
    n *= 2;
    bool ok2 = false;
    Real next = zeta_prime_em(n, target, ok2);
    if (ok && ok2 && abs(next - last) < ctx.epsilon() / 100) return next;
    last = next;
    ok = ok2;
  }
  int achieved = static_cast<int>(
      -log10(abs(last - zeta_prime_em(n / 2, target, ok))).convert_to<double>());
  throw PrecisionError("exactnum", "zeta'(-1) did not converge", achieved);
}

Real c1_value(const PrecisionContext& ctx) {
  Real z = zeta_prime_minus_one(ctx.raised(5));
  return -(6 / pi()) * (12 * z - 1 + log(4 * pi()));
}

NumericBasis make_basis(const Real& height, const PrecisionContext& ctx) {
  return NumericBasis{c1_value(ctx), height};
}

Real eval_numeric(const SymbolicConstant& c, const NumericBasis& basis) {
  Real out = 0;
  const Real p = pi();
  for (const auto& [s, q] : c.terms()) {
    Real v;
    switch (s.kind) {
      case BasisSymbol::Kind::kC1:
        v = basis.c1;
        break;
      case BasisSymbol::Kind::kLog:
        v = log(Real(s.prime)) / p;
        break;
      case BasisSymbol::Kind::kHnt:
        v = basis.height / p;
        break;
    }
    out += from_rational(q) * v;
  }
  return out;
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace scattering
