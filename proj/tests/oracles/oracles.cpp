// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using scattering::EllipticCurve;
using scattering::Integer;
using scattering::Rational;
using scattering::RationalPoint;

F parse(const std::string& s) { return F(s); }

F zeta_prime_minus_one() {
  using boost::math::constants::euler;
  using boost::math::constants::pi;
  const F h("1e-15");
  auto z = [](const F& s) { return boost::math::zeta(s); };
  F d2 = (-z(2 + 2 * h) + 8 * z(2 + h) - 8 * z(2 - h) + z(2 - 2 * h)) / (12 * h);
  return F(1) / 12 - (euler<F>() + log(2 * pi<F>())) / 12 + d2 / (2 * pi<F>() * pi<F>());
}

namespace {

struct Cx {
  F re, im;
};

Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
F norm_one_minus(const Cx& a) { return sqrt((1 - a.re) * (1 - a.re) + a.im * a.im); }
Cx expi(const F& t) { return {cos(t), sin(t)}; }

F bisect(const std::function<F(const F&)>& f, F lo, F hi) {
  for (int i = 0; i < 400; ++i) {
    F m = (lo + hi) / 2;
    if ((f(lo) < 0) == (f(m) < 0)) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return (lo + hi) / 2;
}

F to_f(const Rational& q) { return F(q.get_num().get_str()) / F(q.get_den().get_str()); }

}  // namespace

F qseries_local_height(long a_in, long b_in, const RationalPoint& p) {
  using boost::math::constants::pi;
  const F a(a_in), b(b_in);
  const F inf = std::numeric_limits<F>::infinity();
  auto f = [&](const F& t) { return t * t * t + a * t + b; };
  boost::math::quadrature::exp_sinh<F> es;
  boost::math::quadrature::tanh_sinh<F> ts;
  // int_from^inf dt / (2 sqrt f) for a real root e <= from; t = e + s^2
  // removes the square-root singularity.
  auto tail = [&](const F& e, const F& from) {
    F s0 = sqrt(from - e);
    return es.integrate([&](F s) {
      F t = e + (s + s0) * (s + s0);
      return 1 / sqrt(t * t + e * t + e * e + a);
    }, F(0), inf);
  };
  const F bound = 1000;
  F disc = -4 * a * a * a - 27 * b * b;
  F e1, w1;
  Cx w2;
  if (disc < 0) {
    e1 = bisect(f, -bound, bound);
    w1 = 2 * tail(e1, e1);
    F wi = 2 * es.integrate([&](F s) {
      F t = e1 - s * s;
      return 1 / sqrt(t * t + e1 * t + e1 * e1 + a);
    }, F(0), inf);
    w2 = {w1 / 2, wi / 2};
  } else {
    F c = sqrt(-a / 3);
    F r3 = bisect(f, -bound, -c), r2 = bisect(f, -c, c), r1 = bisect(f, c, bound);
    e1 = r1;
    w1 = 2 * tail(r1, r1);
    F wi = ts.integrate([&](F th) {
      F t = r2 + (r1 - r2) * sin(th) * sin(th);
      return 1 / sqrt(t - r3);
    }, F(0), pi<F>() / 2);
    w2 = {F(0), 2 * wi};
  }
  F z = tail(e1, to_f(p.x()));
  F tau_re = w2.re / w1, tau_im = w2.im / w1;
  Cx q = mul(expi(2 * pi<F>() * tau_re), Cx{exp(-2 * pi<F>() * tau_im), F(0)});
  Cx u = expi(2 * pi<F>() * z / w1), ui = expi(-2 * pi<F>() * z / w1);
  F lam = -log(sqrt(q.re * q.re + q.im * q.im)) / 12 - log(norm_one_minus(u));
  Cx qn = q;
  for (int n = 1; n < 400; ++n) {
    lam -= log(norm_one_minus(mul(qn, u)) * norm_one_minus(mul(qn, ui)));
    qn = mul(qn, q);
  }
  F delta = -16 * (4 * a * a * a + 27 * b * b);
  return lam + log(abs(delta)) / 12;
}

double duplication_height(const EllipticCurve& e, const RationalPoint& p, int n) {
  RationalPoint q = p;
  for (int i = 0; i < n; ++i) q = scattering::add(e, q, q);
  auto lg = [](const Integer& m) {
    long ex = 0;
    double d = mpz_get_d_2exp(&ex, m.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(ex) * std::log(2.0);
  };
  Integer num = q.x().get_num(), den = q.x().get_den();
  double h = std::max(num == 0 ? 0.0 : lg(num), lg(den));
  return h / std::pow(4.0, n);
}

int translation_intersection(const EllipticCurve& e, const RationalPoint& p, const RationalPoint& q,
                             long prime) {
  RationalPoint r = scattering::add(e, q, scattering::neg(e, p));
  if (r.is_infinity()) return -1;
  Integer den = r.x().get_den();
  int v = 0;
  while (den % prime == 0) {
    den /= prime;
    ++v;
  }
  return v / 2;
}

std::size_t bareiss_rank(const scattering::RationalMatrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Integer>> g(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && g[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(g[piv], g[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) g[i][j] = (g[r][c] * g[i][j] - g[i][c] * g[r][j]) / prev;
      g[i][c] = 0;
    }
    prev = g[r][c];
    ++r;
  }
  return r;
}

}  // namespace oracle
