// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/model/tate.hpp"

#include <algorithm>

#include "scattering/curve/weierstrass.hpp"
#include "scattering/error.hpp"

namespace scattering {

int SectionComponentMap::at(const std::string& label) const {
  auto it = components.find(label);
  if (it == components.end()) {
    throw InvalidInput("model", "no section '" + label + "' at p = " + prime.get_str());
  }
  return it->second;
}

SectionComponentMap relabel(const SectionComponentMap& m, const FiberConfiguration& original,
                            const std::vector<int>& new_ids) {
  SectionComponentMap out = m;
  for (auto& [label, id] : out.components) id = new_ids[original.index_of(id)];
  return out;
}

namespace {

constexpr unsigned long kRootSearchLimit = 1UL << 21;

Integer eval_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& p) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mod(acc * x + *it, p);
  return acc;
}

}  // namespace

std::vector<Integer> roots_mod_p(const std::vector<Integer>& coeffs, const Integer& p) {
  if (p > kRootSearchLimit) {
    throw Unsupported("model", "root search modulo " + p.get_str() + " is outside the supported range");
  }
  std::vector<Integer> out;
  for (Integer x = 0; x < p; ++x)
    if (eval_mod(coeffs, x, p) == 0) out.push_back(x);
  return out;
}

namespace {

using Family = KodairaType::Family;

Integer as_integer(const Rational& q) {
  if (q.get_den() != 1) throw InvalidInput("model", "Tate's algorithm needs an integral model");
  return q.get_num();
}

// Residue of q modulo p; q must be p-integral.
Integer residue(const Rational& q, const Integer& p) {
  return mod(q.get_num() * inverse_mod(q.get_den(), p), p);
}

int pval(const Rational& q, const Integer& p) { return valuation(q, p); }

class Run {
 public:
  Run(const EllipticCurve& e, Integer p, std::vector<RationalPoint> pts)
      : p_(std::move(p)), c_(e), pts_(std::move(pts)), comp_(pts_.size(), 0) {}

  TateResult run();

 private:
  Integer a1() const { return as_integer(c_.a1()); }
  Integer a2() const { return as_integer(c_.a2()); }
  Integer a3() const { return as_integer(c_.a3()); }
  Integer a4() const { return as_integer(c_.a4()); }
  Integer a6() const { return as_integer(c_.a6()); }
  Integer b2() const { return as_integer(c_.b2()); }
  Integer b4() const { return as_integer(c_.b4()); }
  Integer b6() const { return as_integer(c_.b6()); }
  Integer b8() const { return as_integer(c_.b8()); }

  bool pdiv(const Integer& x) const { return mpz_divisible_p(x.get_mpz_t(), p_.get_mpz_t()) != 0; }
  int v(const Integer& x) const { return valuation(x, p_); }
  Integer red(const Integer& x) const { return mod(x, p_); }
  Integer inv(const Integer& x) const { return inverse_mod(x, p_); }
  Integer half() const { return inv(Integer(2)); }

  void transform(const Integer& r, const Integer& s, const Integer& t) {
    WeierstrassTransform w{1, Rational(r), Rational(s), Rational(t)};
    c_ = w.apply(c_);
    for (auto& pt : pts_) pt = w.apply(pt);
  }

  // Points whose reduction is the singular point (0, 0) of the current chart.
  bool at_origin(std::size_t i) const {
    const auto& pt = pts_[i];
    return !pt.is_infinity() && pval(pt.x(), p_) >= 1 && pval(pt.y(), p_) >= 1;
  }

  void finish(const KodairaType& type, int tamagawa, int vd) {
    fiber_ = fiber_layout(p_, type);
    fiber_.tamagawa = tamagawa;
    if (type.family == Family::kI) {
      fiber_.conductor_exponent = type.n == 0 ? 0 : 1;
    } else {
      fiber_.conductor_exponent = vd - static_cast<int>(fiber_.size()) + 1;
    }
  }

  // Assigns the component of each singular-reducing point by the residue of
  // coord / scale among the ascending roots; ids[k] is the id for root k.
  void assign_by_root(const std::vector<std::size_t>& idx, bool use_y, const Integer& scale,
                      const std::vector<Integer>& roots, const std::vector<int>& ids,
                      const std::string& where) {
    for (auto i : idx) {
      const Rational& coord = use_y ? pts_[i].y() : pts_[i].x();
      if (pval(coord, p_) < v(scale)) {
        throw Error("model", "section " + std::to_string(i) + " does not reach the tips of " + where);
      }
      Integer res = residue(coord / Rational(scale), p_);
      auto it = std::find(roots.begin(), roots.end(), res);
      if (it == roots.end()) {
        throw Error("model", "section " + std::to_string(i) + " misses every tip of " + where);
      }
      comp_[i] = ids[static_cast<std::size_t>(it - roots.begin())];
    }
  }

  void multiplicative(int n, const std::vector<std::size_t>& singular);

  Integer p_;
  EllipticCurve c_;
  std::vector<RationalPoint> pts_;
  std::vector<int> comp_;
  FiberConfiguration fiber_;
};

TateResult Run::run() {
  const int vd = v(as_integer(c_.discriminant()));
  for (std::size_t i = 0; i < pts_.size(); ++i) comp_[i] = 1;
  if (vd == 0) {
    finish({Family::kI, 0}, 1, vd);
    return {fiber_, comp_};
  }

  // move the singular point to (0, 0)
  Integer r, t;
  if (p_ == 2) {
    if (pdiv(b2())) {
      r = red(a4());
      t = red(((r + a2()) * r + a4()) * r + a6());
    } else {
      Integer ia1 = inv(a1());
      r = red(ia1 * a3());
      t = red(ia1 * (a4() + r * r));
    }
  } else if (p_ == 3) {
    r = pdiv(b2()) ? red(-b6()) : red(-inv(b2()) * b4());
    t = red(a1() * r + a3());
  } else {
    Integer c4 = as_integer(c_.c4()), c6 = as_integer(c_.c6());
    r = pdiv(c4) ? red(-inv(Integer(12)) * b2()) : red(-inv(12 * c4) * (c6 + b2() * c4));
    t = red(-half() * (a1() * r + a3()));
  }
  transform(r, 0, t);

  std::vector<std::size_t> singular;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (at_origin(i)) singular.push_back(i);

  if (!pdiv(as_integer(c_.c4()))) {
    multiplicative(vd, singular);
    return {fiber_, comp_};
  }
  if (v(a6()) < 2) {
    finish({Family::kII, 0}, 1, vd);
    if (!singular.empty()) throw Error("model", "section through the cusp of a type II fibre");
    return {fiber_, comp_};
  }
  if (v(b8()) < 3) {
    finish({Family::kIII, 0}, 2, vd);
    for (auto i : singular) comp_[i] = 2;
    return {fiber_, comp_};
  }
  if (v(b6()) < 3) {
    auto roots = roots_mod_p({red(-a6() / (p_ * p_)), red(a3() / p_), 1}, p_);
    finish({Family::kIV, 0}, roots.empty() ? 1 : 3, vd);
    if (roots.empty()) {
      fiber_.components[1].residue_degree = 2;
      fiber_.components[2].residue_degree = 2;
    }
    assign_by_root(singular, true, p_, roots, {2, 3}, "IV");
    return {fiber_, comp_};
  }

  // p | a1, a2; p^2 | a3, a4; p^3 | a6
  Integer s;
  if (p_ == 2) {
    s = red(a2());
    t = 2 * red(a6() / 4);
  } else if (p_ == 3) {
    s = a1();
    t = a3();
  } else {
    // unreduced: a3 needs to vanish modulo p^2
    const Integer h = (p_ + 1) / 2;
    s = -a1() * h;
    t = -a3() * h;
  }
  transform(0, s, t);

  const Integer p2 = p_ * p_, p3 = p2 * p_;
  Integer b = a2() / p_, c = a4() / p2, d = a6() / p3;
  Integer w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
  Integer x = 3 * c - b * b;
  int sw = pdiv(w) ? (pdiv(x) ? 3 : 2) : 1;

  if (sw == 1) {
    auto roots = roots_mod_p({red(d), red(c), red(b), 1}, p_);
    finish({Family::kIStar, 0}, 1 + static_cast<int>(roots.size()), vd);
    const std::vector<int> tips = {2, 4, 5};
    if (roots.size() == 1) {
      fiber_.components[3].residue_degree = 2;
      fiber_.components[4].residue_degree = 2;
    } else if (roots.empty()) {
      for (int id : tips) fiber_.components[static_cast<std::size_t>(id - 1)].residue_degree = 3;
    }
    assign_by_root(singular, false, p_, roots, tips, "I0*");
    return {fiber_, comp_};
  }

  if (sw == 2) {
    // double root of the cubic to T = 0
    Integer r1;
    if (p_ == 2) {
      r1 = red(c);
    } else if (p_ == 3) {
      r1 = red(c * inv(b));
    } else {
      r1 = red((b * c - 9 * d) * inv(2 * x));
    }
    transform(p_ * r1, 0, 0);

    std::vector<std::size_t> deep;
    for (auto i : singular) {
      if (pval(pts_[i].x(), p_) == 1) {
        comp_[i] = 2;
      } else {
        deep.push_back(i);
      }
    }

    int ix = 3, iy = 3;
    Integer mx = p2, my = p2;
    bool y_stage = true;
    std::vector<Integer> roots;
    while (true) {
      Integer a2t = a2() / p_, a3t = a3() / my, a4t = a4() / (p_ * mx), a6t = a6() / (mx * my);
      if (!pdiv(a3t * a3t + 4 * a6t)) {
        roots = roots_mod_p({red(-a6t), red(a3t), 1}, p_);
        y_stage = true;
        break;
      }
      t = p_ == 2 ? my * red(a6t) : my * red(-a3t * half());
      transform(0, 0, t);
      my *= p_;
      ++iy;
      a2t = a2() / p_;
      a3t = a3() / my;
      a4t = a4() / (p_ * mx);
      a6t = a6() / (mx * my);
      if (!pdiv(a4t * a4t - 4 * a6t * a2t)) {
        roots = roots_mod_p({red(a6t), red(a4t), red(a2t)}, p_);
        y_stage = false;
        break;
      }
      r = p_ == 2 ? mx * red(a6t * inv(a2t)) : mx * red(-a4t * inv(2 * a2t));
      transform(r, 0, 0);
      mx *= p_;
      ++ix;
      if (ix + iy > 4000) throw Error("model", "I_n* subprocedure did not terminate");
    }
    const int n = ix + iy - 5;
    finish({Family::kIStar, n}, roots.empty() ? 2 : 4, vd);
    if (roots.empty()) {
      fiber_.components[static_cast<std::size_t>(n + 3)].residue_degree = 2;
      fiber_.components[static_cast<std::size_t>(n + 4)].residue_degree = 2;
    }
    const std::string where = to_string(fiber_.type);
    for (auto i : deep) {
      if (pval(pts_[i].x(), p_) < v(mx)) {
        throw Error("model", "section " + std::to_string(i) + " stops on the chain of " + where);
      }
    }
    assign_by_root(deep, y_stage, y_stage ? my : mx, roots, {n + 4, n + 5}, where);
    return {fiber_, comp_};
  }

  // triple root to T = 0
  Integer rp;
  if (p_ == 2) {
    rp = red(d);
  } else if (p_ == 3) {
    rp = red(-d);
  } else {
    rp = red(-b * inv(Integer(3)));
  }
  transform(p_ * rp, 0, 0);
  const Integer p4 = p2 * p2;
  Integer x3t = a3() / p2, x6t = a6() / p4;
  if (!pdiv(x3t * x3t + 4 * x6t)) {
    auto roots = roots_mod_p({red(-x6t), red(x3t), 1}, p_);
    finish({Family::kIVStar, 0}, roots.empty() ? 1 : 3, vd);
    if (roots.empty()) {
      for (int id : {4, 5, 6, 7}) fiber_.components[static_cast<std::size_t>(id - 1)].residue_degree = 2;
    }
    assign_by_root(singular, true, p2, roots, {5, 7}, "IV*");
    return {fiber_, comp_};
  }
  t = p_ == 2 ? p2 * red(x6t) : p2 * red(-x3t * half());
  transform(0, 0, t);
  if (v(a4()) < 4) {
    finish({Family::kIIIStar, 0}, 2, vd);
    for (auto i : singular) comp_[i] = 7;
    return {fiber_, comp_};
  }
  if (v(a6()) < 6) {
    finish({Family::kIIStar, 0}, 1, vd);
    if (!singular.empty()) throw Error("model", "section through the singular point of a II* fibre");
    return {fiber_, comp_};
  }
  throw NonMinimalModel("model", "model " + to_string(c_) + " is not minimal at p = " + p_.get_str() +
                                     "; pass it through minimal_model first");
}

Integer lift_root(const Integer& root, const Integer& a1, const Integer& a2, const Integer& pn) {
  // Y^2 + a1 Y - a2 by Newton
  Integer y = root;
  for (int k = 0; k < 64; ++k) {
    Integer f = mod(y * y + a1 * y - a2, pn);
    if (f == 0) break;
    y = mod(y - f * inverse_mod(2 * y + a1, pn), pn);
  }
  return y;
}

void Run::multiplicative(int n, const std::vector<std::size_t>& singular) {
  auto slopes = roots_mod_p({red(-a2()), red(a1()), 1}, p_);
  const bool split = !slopes.empty();
  int cp = split ? n : (n % 2 == 0 ? 2 : 1);
  finish({Family::kI, n}, cp, n);
  fiber_.split = split;
  if (!split) {
    for (int i = 1; i < n; ++i)
      if (2 * i != n) fiber_.components[static_cast<std::size_t>(i)].residue_degree = 2;
  }
  if (singular.empty()) return;

  // refine the node so that a3, a4 vanish to high order
  const int N = 2 * n + 8;
  Integer pn;
  mpz_pow_ui(pn.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(N));
  for (int it = 0; it < 200 && (v(a3()) < N || v(a4()) < N); ++it) {
    Integer det = -b2();
    Integer dinv = inverse_mod(det, pn);
    Integer r = mod((a1() * a3() + 2 * a4()) * dinv, pn);
    Integer t = mod((2 * a2() * a3() - a1() * a4()) * dinv, pn);
    transform(r, 0, t);
  }
  if (v(a3()) < N || v(a4()) < N) throw Error("model", "node refinement did not converge");

  Integer alpha = split ? lift_root(slopes[0], a1(), a2(), pn) : Integer(0);
  Integer beta = split ? lift_root(slopes.size() > 1 ? slopes[1] : slopes[0], a1(), a2(), pn) : Integer(0);
  for (auto i : singular) {
    const auto& pt = pts_[i];
    int k = pval(pt.x(), p_);
    if (2 * k > n) throw Unsupported("model", "section too close to the node of " + to_string(fiber_.type));
    if (2 * k == n) {
      comp_[i] = k + 1;
      continue;
    }
    if (!split) throw Error("model", "section on a non-rational component of a non-split fibre");
    int va = pval(pt.y() - Rational(alpha) * pt.x(), p_);
    int vb = pval(pt.y() - Rational(beta) * pt.x(), p_);
    comp_[i] = (va > vb ? k : n - k) + 1;
  }
}

}  // namespace

TateResult run_tate(const EllipticCurve& e, const Integer& p, const std::vector<RationalPoint>& points) {
  if (!is_prime(p)) throw InvalidInput("model", p.get_str() + " is not prime");
  if (!e.is_integral()) throw InvalidInput("model", "Tate's algorithm needs an integral model");
  for (const auto& pt : points) {
    if (!e.contains(pt)) throw InvalidInput("model", to_string(pt) + " is not on " + to_string(e));
  }
  return Run(e, p, points).run();
}

FiberConfiguration tate_fiber(const EllipticCurve& e, const Integer& p) { return run_tate(e, p).fiber; }

SectionComponentMap section_components(const EllipticCurve& e, const Integer& p,
                                       const std::vector<MarkedPoint>& points) {
  std::vector<RationalPoint> pts;
  for (const auto& m : points) pts.push_back(m.point);
  TateResult res = run_tate(e, p, pts);
  SectionComponentMap out;
  out.prime = p;
  for (std::size_t i = 0; i < points.size(); ++i) out.components[points[i].label] = res.components[i];
  return out;
}

}  // namespace scattering
