#pragma once

// Newton polygons of f(1-T), Hodge polygons of ell-primary groups, and the
// lies-on-or-above comparison between them.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "absurf/group_shape.hpp"
#include "absurf/intarith.hpp"
#include "absurf/weil.hpp"

namespace absurf {

// Lower-convex piecewise-linear function on [0, span] with integer vertex
// abscissae; heights are exact rationals (evaluation between vertices can be
// half-integral).
struct LatticePolygon {
  int span = 0;
  std::vector<std::pair<int, Rat>> vertices;  // x strictly increasing, 0..span

  Rat eval_at(const Rat& x) const;
  bool convex() const;  // slopes nondecreasing
};

struct EllGroupProfile {
  Int ell;
  std::array<unsigned long, 4> exponents{};  // ascending, zero padded
};

// Coefficients Q0..Q4 of f(1-T):
//   Q0 = f(1), Q1 = -(4+3a1+2a2+a1q), Q2 = 6+3a1+a2, Q3 = -(4+a1), Q4 = 1.
// Q0 = 0 (1 a root of f) is rejected.
std::array<Int, 5> shifted_coefficients(const WeilSurfacePolynomial& w);

// Lower convex hull of (i, nu_ell(Q_i)); zero coefficients contribute no
// point (valuation +infinity). Constant term must be nonzero.
LatticePolygon newton_polygon(std::span<const Int> coeffs, const Int& ell);

// Vertices (i, m1+...+m_{4-i}) for 0 <= i < 4 plus the closing vertex (4, 0),
// so the polygon spans [0, 4] like the Newton polygon it is compared with.
LatticePolygon hodge_polygon(const EllGroupProfile& g);

// np(x) >= hp(x) on the whole span; both piecewise-linear with integer vertex
// abscissae, so checking the integer points decides it.
bool lies_on_or_above(const LatticePolygon& np, const LatticePolygon& hp);

// Rybakov's criterion at g = 2: the isogeny class of w contains a variety
// with group `shape` iff the Newton polygon of f(1-T) lies on or above the
// Hodge polygon of the ell-primary part, for every ell dividing f(1).
// Requires ruck_classify(w) = FieldSimple and order(shape) = f(1).
bool rybakov_accepts(const WeilSurfacePolynomial& w, const GroupShape& shape);

}  // namespace absurf
