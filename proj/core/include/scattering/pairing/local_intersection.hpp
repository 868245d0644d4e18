// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <vector>

#include "scattering/model/regular_model.hpp"

namespace scattering {

/// i_p(S_P, S_Q) on the minimal regular model. comp_p and comp_q are the
/// fibre components met by the two sections at p. Throws InvalidInput if
/// P == Q.
///
/// Sections on different components are disjoint. At a point where the
/// Weierstrass model is regular the length of Z_(p)/(x_P - x_Q, y_P - y_Q)
/// is read off directly (in the chart z = -x/y, w = -1/y near O). Sections
/// through the singular point of the Weierstrass model are moved by the
/// translation -P, an automorphism of the smooth locus, to the pair (O, Q - P).
int local_intersection(const EllipticCurve& e, const RationalPoint& p_pt, const RationalPoint& q_pt,
                       const Integer& p, int comp_p, int comp_q);

/// Same, with components taken from the model.
int local_intersection(const RegularModel& m, const std::string& a, const std::string& b,
                       const Integer& p);

/// Same, running Tate's algorithm at p to locate the two sections.
int local_intersection(const EllipticCurve& e, const RationalPoint& p_pt, const RationalPoint& q_pt,
                       const Integer& p);

/// i_p(O, R) = max(0, -v_p(x(R)) / 2).
int intersection_with_zero(const RationalPoint& r, const Integer& p);

/// Primes at which the two sections can meet: primes dividing the
/// coordinate differences (or the common denominators near O).
std::vector<Integer> meeting_primes(const RationalPoint& p_pt, const RationalPoint& q_pt);

}  // namespace scattering
