#include "absurf/weil.hpp"

#include <algorithm>
#include <set>

#include "absurf/parallel.hpp"

namespace absurf {

Int WeilSurfacePolynomial::point_count() const {
  return q.q * q.q + a1 * (q.q + 1) + a2 + 1;
}

Poly WeilSurfacePolynomial::coefficients() const {
  return {q.q * q.q, a1 * q.q, a2, a1, Int(1)};
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::FieldSimple: return "FieldSimple";
    case Kind::ExceptionalA: return "ExceptionalA";
    case Kind::ExceptionalB: return "ExceptionalB";
    case Kind::ExceptionalCPlus: return "ExceptionalCPlus";
    case Kind::ExceptionalCMinus: return "ExceptionalCMinus";
    case Kind::Rejected: return "Rejected";
  }
  return "?";
}

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::FailsA: return "fails-a";
    case RejectReason::FailsB: return "fails-b";
    case RejectReason::FailsC: return "fails-c";
  }
  return "?";
}

const char* exceptional_case_name(ExceptionalCase c) {
  switch (c) {
    case ExceptionalCase::A: return "a";
    case ExceptionalCase::B: return "b";
    case ExceptionalCase::CPlus: return "c+";
    case ExceptionalCase::CMinus: return "c-";
  }
  return "?";
}

Kind exceptional_kind(ExceptionalCase c) {
  switch (c) {
    case ExceptionalCase::A: return Kind::ExceptionalA;
    case ExceptionalCase::B: return Kind::ExceptionalB;
    case ExceptionalCase::CPlus: return Kind::ExceptionalCPlus;
    case ExceptionalCase::CMinus: return Kind::ExceptionalCMinus;
  }
  return Kind::Rejected;
}

std::optional<ExceptionalCase> detect_exceptional(const PrimePower& q, const Int& a1,
                                                  const Int& a2) {
  bool r_even = q.r % 2 == 0;
  if (a1 == 0 && a2 == -2 * q.q && !r_even) return ExceptionalCase::A;
  if (a1 == 0 && a2 == 2 * q.q && r_even && mod_floor(q.p, 4) == 1)
    return ExceptionalCase::B;
  if (r_even && a2 == 3 * q.q && mod_floor(q.p, 3) == 1) {
    Int s = isqrt(q.q);  // exact for even r
    if (a1 == 2 * s) return ExceptionalCase::CPlus;
    if (a1 == -2 * s) return ExceptionalCase::CMinus;
  }
  return std::nullopt;
}

Classification ruck_classify(const PrimePower& q, const Int& a1, const Int& a2) {
  Classification out;
  if (auto exc = detect_exceptional(q, a1, a2)) {
    out.kind = exceptional_kind(*exc);
    return out;
  }

  // (a): strict region bounds, squared forms to stay in Z
  Int a2_plus_2q = a2 + 2 * q.q;
  bool cond_a = a1 * a1 < 16 * q.q && a2_plus_2q > 0 &&
                a2_plus_2q * a2_plus_2q > 4 * a1 * a1 * q.q && 4 * a2 < a1 * a1 + 8 * q.q;
  if (!cond_a) {
    out.kind = Kind::Rejected;
    out.reject_reason = RejectReason::FailsA;
    return out;
  }

  // (b): a1^2 - 4 a2 + 8q must not be a perfect square (it is positive here)
  if (is_perfect_square(a1 * a1 - 4 * a2 + 8 * q.q)) {
    out.kind = Kind::Rejected;
    out.reject_reason = RejectReason::FailsB;
    return out;
  }

  // (c): disjunction, all branches recorded
  Valuation va1 = nu(q.p, a1);
  Valuation va2 = nu(q.p, a2);
  if (va1.is_zero() && va2.twice_at_least(q.r) &&
      !is_square_in_zp(q.p, a2_plus_2q * a2_plus_2q - 4 * q.q * a1 * a1))
    out.c_i = true;
  if (va2.is_zero()) out.c_ii = true;
  if (va1.twice_at_least(q.r) && va2.at_least(q.r)) {
    WeilSurfacePolynomial w{q, a1, a2};
    // (a) and (b) exclude repeated roots, so the discriminant is nonzero here
    if (!has_root_in_zp(q.p, w.coefficients())) out.c_iii = true;
  }
  if (out.c_i || out.c_ii || out.c_iii) {
    out.kind = Kind::FieldSimple;
  } else {
    out.kind = Kind::Rejected;
    out.reject_reason = RejectReason::FailsC;
  }
  return out;
}

std::vector<GroupShape> xing_groups(ExceptionalCase c, const PrimePower& q) {
  bool r_even = q.r % 2 == 0;
  std::vector<GroupShape> out;
  switch (c) {
    case ExceptionalCase::A: {
      if (r_even) throw std::invalid_argument("xing_groups: case (a) needs odd r");
      Int qm1 = q.q - 1;
      std::set<GroupShape> shapes;
      shapes.insert(GroupShape::from_cyclic_orders({qm1, qm1}));
      if (mpz_odd_p(q.q.get_mpz_t())) {
        Int half = qm1 / 2;
        shapes.insert(GroupShape::from_cyclic_orders({Int(2), Int(2), half, half}));
        shapes.insert(GroupShape::from_cyclic_orders({Int(2), half, qm1}));
      }
      out.assign(shapes.begin(), shapes.end());
      break;
    }
    case ExceptionalCase::B: {
      if (!r_even || mod_floor(q.p, 4) != 1)
        throw std::invalid_argument("xing_groups: case (b) needs even r, p = 1 mod 4");
      out.push_back(GroupShape::from_cyclic_orders({q.q + 1, q.q + 1}));
      break;
    }
    case ExceptionalCase::CPlus:
    case ExceptionalCase::CMinus: {
      if (!r_even || mod_floor(q.p, 3) != 1)
        throw std::invalid_argument("xing_groups: case (c) needs even r, p = 1 mod 3");
      Int s = isqrt(q.q);
      Int n = c == ExceptionalCase::CPlus ? q.q + s + 1 : q.q - s + 1;
      out.push_back(GroupShape::from_cyclic_orders({n, n}));
      break;
    }
  }
  return out;
}

std::vector<IsogenyClassRecord> enumerate_isogeny_classes(const PrimePower& q, unsigned jobs) {
  Int a1_max = isqrt(16 * q.q - 1);
  long rows = 2 * a1_max.get_si() + 1;
  std::vector<std::vector<IsogenyClassRecord>> per_row(rows);
  parallel_for(size_t(rows), jobs, [&](size_t row) {
    Int a1 = Int(long(row)) - a1_max;
    // closed bounds: ceil(2|a1|sqrt(q)) - 2q <= a2 <= floor(a1^2/4) + 2q
    Int rad = 4 * a1 * a1 * q.q;
    Int s = isqrt(rad);
    Int lo = (s * s == rad ? s : s + 1) - 2 * q.q;
    Int hi = (a1 * a1) / 4 + 2 * q.q;
    std::vector<IsogenyClassRecord> recs;
    for (Int a2 = lo; a2 <= hi; ++a2) {
      IsogenyClassRecord rec{a1, a2, ruck_classify(q, a1, a2),
                             WeilSurfacePolynomial{q, a1, a2}.point_count()};
      recs.push_back(std::move(rec));
    }
    per_row[row] = std::move(recs);
  });
  std::vector<IsogenyClassRecord> out;
  for (auto& r : per_row)
    for (auto& rec : r) out.push_back(std::move(rec));
  return out;
}

bool hasse_weil_window_contains(const Int& q, const Int& N) {
  // (sqrt q - 1)^4 = q^2 + 6q + 1 - (4q+4) sqrt q, and symmetrically for +.
  Int c = q * q + 6 * q + 1;
  Int w = (4 * q + 4) * (4 * q + 4) * q;
  Int lo_gap = c - N;  // (sqrt q - 1)^4 <= N  <=>  lo_gap <= (4q+4) sqrt q
  if (lo_gap > 0 && lo_gap * lo_gap > w) return false;
  Int hi_gap = N - c;  // N <= (sqrt q + 1)^4  <=>  hi_gap <= (4q+4) sqrt q
  if (hi_gap > 0 && hi_gap * hi_gap > w) return false;
  return true;
}

}  // namespace absurf
