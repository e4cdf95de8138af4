#pragma once

// The congruence form of Rybakov's criterion and the witness search deciding
// whether G(n1,n2,n3,n4) occurs as the point group of a simple abelian
// surface. Every decision is exact integer arithmetic.

#include <vector>

#include "absurf/group_shape.hpp"
#include "absurf/intarith.hpp"
#include "absurf/weil.hpp"

namespace absurf {

Int group_order(const GroupShape& shape);

// All rank <= 4 shapes of order N: chains d1|d2|d3|d4 with d1 d2 d3 d4 = N,
// in canonical (n1,n2,n3,n4) form, deterministic ascending order.
std::vector<GroupShape> divisor_chains(const Int& N);

// f(1) = order(shape) plus the three congruences
//   4 + 3a1 + 2a2 + q a1 = 0  mod n1^3 n2^2 n3
//   6 + 3a1 + a2       = 0    mod n1^2 n2
//   4 + a1             = 0    mod n1.
// Requires ruck_classify(w) = FieldSimple.
bool congruence_criterion(const WeilSurfacePolynomial& w, const GroupShape& shape);

// All prime powers q with (sqrt q - 1)^4 <= N <= (sqrt q + 1)^4, exact.
std::vector<PrimePower> q_range_for_order(const Int& N);

enum class VerdictSource { Congruence, Polygon, Both };

struct Witness {
  PrimePower q;
  Int a1;
  Int a2;
  VerdictSource source = VerdictSource::Both;
};

// A Theorem-2.2-shaped class whose candidate group list contains the shape.
// Kept apart from field-simple witnesses: the side conditions are necessary,
// and which case-(a) group actually arises is not decided here.
struct ExceptionalCandidate {
  PrimePower q;
  ExceptionalCase kind;
  Int a1;
  Int a2;
};

struct WitnessReport {
  std::vector<Witness> field_simple;
  std::vector<ExceptionalCandidate> exceptional;
};

// Search every q in the exact Hasse-Weil window. a2 is pinned by the order
// equation a2 = N - 1 - a1(q+1) - q^2, and a1 runs over the residue class
// -4 mod n1 (anything else fails the third congruence). A pair becomes a
// witness when it is FieldSimple, satisfies the congruences, and the polygon
// criterion agrees (it provably must; disagreement throws).
// Deterministic order by (q, a1) regardless of worker count.
WitnessReport find_witnesses(const GroupShape& shape, unsigned jobs = 1);

struct OccursResult {
  bool field_simple = false;
  bool exceptional_candidate = false;
  bool any() const { return field_simple || exceptional_candidate; }
};

OccursResult occurs(const GroupShape& shape, unsigned jobs = 1);

}  // namespace absurf
