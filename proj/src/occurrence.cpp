#include "absurf/occurrence.hpp"

#include <algorithm>

#include "absurf/parallel.hpp"
#include "absurf/polygon.hpp"

namespace absurf {

Int group_order(const GroupShape& shape) { return shape.order(); }

namespace {

std::vector<Int> divisors_of(const Int& N) {
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factorize(N)) {
    size_t base = divs.size();
    Int pe = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pe *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<GroupShape> divisor_chains(const Int& N) {
  if (N < 1) throw std::invalid_argument("divisor_chains: need N >= 1");
  std::vector<GroupShape> out;
  auto divs = divisors_of(N);
  for (const Int& n1 : divs) {
    Int n1_4 = n1 * n1 * n1 * n1;
    if (n1_4 > N) break;
    if (N % n1_4 != 0) continue;
    Int rem1 = N / n1_4;
    for (const Int& n2 : divs) {
      Int n2_3 = n2 * n2 * n2;
      if (n2_3 > rem1) break;
      if (rem1 % n2_3 != 0) continue;
      Int rem2 = rem1 / n2_3;
      for (const Int& n3 : divs) {
        Int n3_2 = n3 * n3;
        if (n3_2 > rem2) break;
        if (rem2 % n3_2 != 0) continue;
        out.push_back(GroupShape{n1, n2, n3, rem2 / n3_2});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool congruence_criterion(const WeilSurfacePolynomial& w, const GroupShape& shape) {
  if (!ruck_classify(w.q, w.a1, w.a2).field_simple())
    throw inapplicable_error("congruence_criterion: needs a FieldSimple class");
  if (w.point_count() != shape.order()) return false;
  const Int& q = w.q.q;
  Int m1 = shape.n1 * shape.n1 * shape.n1 * shape.n2 * shape.n2 * shape.n3;
  Int m2 = shape.n1 * shape.n1 * shape.n2;
  if (mod_floor(4 + 3 * w.a1 + 2 * w.a2 + q * w.a1, m1) != 0) return false;
  if (mod_floor(6 + 3 * w.a1 + w.a2, m2) != 0) return false;
  return mod_floor(4 + w.a1, shape.n1) == 0;
}

std::vector<PrimePower> q_range_for_order(const Int& N) {
  if (N < 1) throw std::invalid_argument("q_range_for_order: need N >= 1");
  Int t = iroot(N, 4);
  Int lo = (t - 1) * (t - 1) - 2;
  if (lo < 2) lo = 2;
  Int hi = (t + 2) * (t + 2) + 2;
  std::vector<PrimePower> out;
  for (auto& pp : prime_powers_in(lo, hi))
    if (hasse_weil_window_contains(pp.q, N)) out.push_back(std::move(pp));
  return out;
}

namespace {

// Exceptional matches at fixed q for a target order N: each case pins
// (a1, a2) and f(1); the shape must appear in the Xing list.
void collect_exceptional(const PrimePower& q, const GroupShape& shape, const Int& N,
                         std::vector<ExceptionalCandidate>& out) {
  auto try_case = [&](ExceptionalCase c, const Int& a1, const Int& a2) {
    if (detect_exceptional(q, a1, a2) != c) return;
    if (WeilSurfacePolynomial{q, a1, a2}.point_count() != N) return;
    auto groups = xing_groups(c, q);
    if (std::find(groups.begin(), groups.end(), shape) != groups.end())
      out.push_back(ExceptionalCandidate{q, c, a1, a2});
  };
  try_case(ExceptionalCase::A, Int(0), Int(-2 * q.q));
  try_case(ExceptionalCase::B, Int(0), Int(2 * q.q));
  if (q.r % 2 == 0) {
    Int s = isqrt(q.q);
    try_case(ExceptionalCase::CPlus, 2 * s, 3 * q.q);
    try_case(ExceptionalCase::CMinus, -2 * s, 3 * q.q);
  }
}

struct PerQ {
  std::vector<Witness> witnesses;
  std::vector<ExceptionalCandidate> exceptional;
};

PerQ search_q(const PrimePower& q, const GroupShape& shape, const Int& N,
              bool stop_after_first) {
  PerQ out;
  collect_exceptional(q, shape, N, out.exceptional);

  Int a1_cap = isqrt(16 * q.q - 1);  // a1^2 < 16q
  // witnesses need 4 + a1 = 0 mod n1; start at the smallest such a1 >= -cap
  Int lo_num = -a1_cap + 4;
  Int t;
  mpz_cdiv_q(t.get_mpz_t(), lo_num.get_mpz_t(), shape.n1.get_mpz_t());
  Int a1 = -4 + shape.n1 * t;
  Int c3_mod = shape.n1 * shape.n1 * shape.n2;
  Int c2_mod = c3_mod * shape.n1 * shape.n2 * shape.n3;
  for (; a1 <= a1_cap; a1 += shape.n1) {
    Int a2 = N - 1 - a1 * (q.q + 1) - q.q * q.q;  // order equation
    if (mod_floor(6 + 3 * a1 + a2, c3_mod) != 0) continue;
    if (mod_floor(4 + 3 * a1 + 2 * a2 + q.q * a1, c2_mod) != 0) continue;
    if (!ruck_classify(q, a1, a2).field_simple()) continue;
    WeilSurfacePolynomial w{q, a1, a2};
    if (!congruence_criterion(w, shape))
      throw std::logic_error("find_witnesses: congruence filter out of sync");
    if (!rybakov_accepts(w, shape))
      throw std::logic_error(
          "find_witnesses: polygon criterion disagrees with the congruences for q=" +
          q.q.get_str() + " a1=" + a1.get_str() + " a2=" + a2.get_str());
    out.witnesses.push_back(Witness{q, a1, a2, VerdictSource::Both});
    if (stop_after_first) return out;
  }
  return out;
}

WitnessReport find_witnesses_impl(const GroupShape& shape, unsigned jobs,
                                  bool stop_after_first) {
  for (const Int* n : {&shape.n1, &shape.n2, &shape.n3, &shape.n4})
    if (*n < 1) throw std::invalid_argument("find_witnesses: shape entries must be positive");
  Int N = shape.order();
  auto qs = q_range_for_order(N);
  std::vector<PerQ> per_q(qs.size());
  parallel_for(qs.size(), jobs,
               [&](size_t i) { per_q[i] = search_q(qs[i], shape, N, stop_after_first); });
  WitnessReport report;
  for (auto& pq : per_q) {
    for (auto& w : pq.witnesses) report.field_simple.push_back(std::move(w));
    for (auto& e : pq.exceptional) report.exceptional.push_back(std::move(e));
  }
  return report;
}

}  // namespace

WitnessReport find_witnesses(const GroupShape& shape, unsigned jobs) {
  return find_witnesses_impl(shape, jobs, false);
}

OccursResult occurs(const GroupShape& shape, unsigned jobs) {
  WitnessReport report = find_witnesses_impl(shape, jobs, true);
  return OccursResult{!report.field_simple.empty(), !report.exceptional.empty()};
}

}  // namespace absurf
