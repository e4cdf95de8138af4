#pragma once

// Degree-4 Weil polynomials f(T) = T^4 + a1 T^3 + a2 T^2 + a1 q T + q^2 and
// the classification of candidate (q, a1, a2) triples: Rueck's criterion for
// the field case, the Waterhouse/Xing list for the exceptional classes.

#include <optional>
#include <vector>

#include "absurf/group_shape.hpp"
#include "absurf/intarith.hpp"

namespace absurf {

struct WeilSurfacePolynomial {
  PrimePower q;
  Int a1;
  Int a2;

  // number of rational points, f(1) = q^2 + a1(q+1) + a2 + 1
  Int point_count() const;
  Poly coefficients() const;  // monic degree 4, low -> high
};

enum class Kind {
  FieldSimple,
  ExceptionalA,
  ExceptionalB,
  ExceptionalCPlus,
  ExceptionalCMinus,
  Rejected,
};

enum class RejectReason { FailsA, FailsB, FailsC };

enum class ExceptionalCase { A, B, CPlus, CMinus };

struct Classification {
  Kind kind = Kind::Rejected;
  std::optional<RejectReason> reject_reason;
  // which branch(es) of the disjunctive condition (c) passed (diagnostics)
  bool c_i = false;
  bool c_ii = false;
  bool c_iii = false;

  bool field_simple() const { return kind == Kind::FieldSimple; }
  bool exceptional() const { return kind != Kind::FieldSimple && kind != Kind::Rejected; }
};

const char* kind_name(Kind k);
const char* reject_reason_name(RejectReason r);
const char* exceptional_case_name(ExceptionalCase c);
Kind exceptional_kind(ExceptionalCase c);

// Matches (q, a1, a2) against the exceptional shapes:
//   (a) (0, -2q) with r odd
//   (b) (0, 2q) with r even and p = 1 mod 4
//   (c) (+-2 sqrt(q), 3q) with r even and p = 1 mod 3
std::optional<ExceptionalCase> detect_exceptional(const PrimePower& q, const Int& a1,
                                                  const Int& a2);

// Full classification. Exceptional detection runs first so exceptional
// polynomials are never mislabeled Rejected. The field-simple conditions are
// evaluated in integer-only equivalent forms:
//   (a) a1^2 < 16q;  a2 + 2q > 0 and (a2+2q)^2 > 4 a1^2 q;  4 a2 < a1^2 + 8q
//   (b) a1^2 - 4 a2 + 8q is not a perfect square
//   (c) one of
//       (i)   nu_p(a1) = 0, 2 nu_p(a2) >= r, (a2+2q)^2 - 4q a1^2 no square in Z_p
//       (ii)  nu_p(a2) = 0
//       (iii) 2 nu_p(a1) >= r, nu_p(a2) >= r, f has no root in Z_p
Classification ruck_classify(const PrimePower& q, const Int& a1, const Int& a2);

// The group structures arising on the exceptional classes. Case/side-condition
// mismatches are rejected; for case (a) with even q only (Z/(q-1))^2 is
// well-formed and emitted.
std::vector<GroupShape> xing_groups(ExceptionalCase c, const PrimePower& q);

struct IsogenyClassRecord {
  Int a1;
  Int a2;
  Classification cls;
  Int f1;
};

// Every integer pair in the closed condition-(a) region (boundary included so
// the exceptional polynomials, which sit on it, are listed), classified.
// Deterministic (a1, a2) lexicographic order regardless of worker count.
std::vector<IsogenyClassRecord> enumerate_isogeny_classes(const PrimePower& q,
                                                          unsigned jobs = 1);

// Exact test of (sqrt(q)-1)^4 <= N <= (sqrt(q)+1)^4.
bool hasse_weil_window_contains(const Int& q, const Int& N);

}  // namespace absurf
