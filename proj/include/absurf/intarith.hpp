#pragma once

// Exact integer, p-adic, and quadratic-surd arithmetic. Everything here is
// decided in integer/rational arithmetic; no floating point enters any
// comparison.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace absurf {

using Int = mpz_class;
using Rat = mpq_class;

// Trial division is the only factorization method used; beyond this limit an
// incomplete factorization raises factor_limit_error instead of guessing.
inline constexpr unsigned long kTrialDivisionLimit = 10'000'000UL;

class factor_limit_error : public std::runtime_error {
 public:
  explicit factor_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A criterion whose preconditions fail (zero discriminant, mismatched group
// order, non-field-simple input) is inapplicable rather than false.
class inapplicable_error : public std::invalid_argument {
 public:
  explicit inapplicable_error(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// prime powers

struct PrimePower {
  Int q;        // q = p^r
  Int p;        // prime
  unsigned r = 0;

  bool operator==(const PrimePower& o) const { return q == o.q; }
  bool operator<(const PrimePower& o) const { return q < o.q; }
};

bool is_prime(const Int& n);

// Factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// (p, r) with q = p^r, or nullopt if q has two or more prime factors.
// q < 2 is rejected.
std::optional<PrimePower> as_prime_power(const Int& q);
PrimePower require_prime_power(const Int& q);

// Cached ascending list of primes <= limit.
const std::vector<uint32_t>& primes_up_to(uint32_t limit);

// All prime powers q with lo <= q <= hi, ascending. Segmented sieve; hi must
// stay within the trial-division regime (sqrt(hi) <= kTrialDivisionLimit).
std::vector<PrimePower> prime_powers_in(const Int& lo, const Int& hi);

// ---------------------------------------------------------------------------
// integer roots

Int isqrt(const Int& n);                  // floor(sqrt n), n >= 0
Int iroot(const Int& n, unsigned k);      // floor(n^(1/k)), n >= 0
Int ceil_root(const Int& n, unsigned k);  // smallest t with t^k >= n
bool is_perfect_square(const Int& n);

// m = core * sq^2 with core square-free.
std::pair<Int, Int> squarefree_decompose(const Int& m);

Int mod_floor(const Int& a, const Int& m);  // representative in [0, m)

// ---------------------------------------------------------------------------
// p-adic valuation

// nu_p(0) is a distinguished +infinity marker that compares above every
// finite valuation, so threshold conditions hold vacuously at 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(unsigned long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  unsigned long value() const;

  bool is_zero() const { return !infinite_ && v_ == 0; }
  // nu >= t
  bool at_least(unsigned long t) const { return infinite_ || v_ >= t; }
  // 2*nu >= t; half-integer thresholds are compared with cleared denominators
  bool twice_at_least(unsigned long t) const { return infinite_ || 2 * v_ >= t; }

  bool operator==(const Valuation& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }

 private:
  Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  unsigned long v_;
};

Valuation nu(const Int& p, const Int& n);

// True iff x is a square in the ring of p-adic integers.
bool is_square_in_zp(const Int& p, const Int& x);

// ---------------------------------------------------------------------------
// integer polynomials (coefficients low -> high, trailing coefficient the
// leading one)

using Poly = std::vector<Int>;

Int poly_eval(const Poly& f, const Int& x);
Poly poly_derivative(const Poly& f);
Int poly_disc(const Poly& f);  // discriminant via Sylvester resultant

// True iff monic f has a root in Z_p. Simple residues lift by Hensel;
// singular residues recurse on f(rho + pT) with the maximal p-power stripped.
// Zero discriminant is rejected (inapplicable_error).
bool has_root_in_zp(const Int& p, const Poly& f);

// ---------------------------------------------------------------------------
// exact radicals

// sign of sqrt(m) - t for m >= 0 and rational t
int cmp_sqrt_rat(const Int& m, const Rat& t);

// c * sqrt(radicand)
struct RadicalTerm {
  Rat coeff;
  Int radicand;
};

// Exact sign of c0 + sum of terms. Radicands are normalized square-free;
// distinct square-free radicands have Q-independent roots, so zero detection
// is coefficient vanishing and nonzero values separate under rational
// interval refinement.
int radical_sign(const Rat& c0, std::vector<RadicalTerm> terms);

// a + b*sqrt(m) with exact comparisons. After normalization m is square-free
// and m = 0 marks a rational value (b folded into a).
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), m_(0) {}
  QuadraticSurd(Rat a) : a_(std::move(a)), b_(0), m_(0) {}  // NOLINT: implicit
  QuadraticSurd(Rat a, Rat b, Int m);

  const Rat& rational_part() const { return a_; }
  const Rat& radical_coeff() const { return b_; }
  const Int& radicand() const { return m_; }
  bool is_rational() const { return m_ == 0; }

  int sign() const;
  int cmp(const QuadraticSurd& o) const;
  int cmp(const Rat& t) const;

  QuadraticSurd operator-() const;
  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  // Same-field product; mixed radicands are rejected.
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const Rat& s) const;
  QuadraticSurd squared() const { return *this * *this; }
  QuadraticSurd pow(unsigned e) const;

  bool operator==(const QuadraticSurd& o) const { return cmp(o) == 0; }
  bool operator<(const QuadraticSurd& o) const { return cmp(o) < 0; }
  bool operator<=(const QuadraticSurd& o) const { return cmp(o) <= 0; }
  bool operator>(const QuadraticSurd& o) const { return cmp(o) > 0; }
  bool operator>=(const QuadraticSurd& o) const { return cmp(o) >= 0; }

  double approx() const;  // display only, never used in a decision
  std::string str() const;

 private:
  Rat a_, b_;
  Int m_;
};

// ||sqrt(m)||: distance from sqrt(m) to its nearest integer, as an exact
// surd; 0 iff m is a perfect square. The nearer side is picked by the
// integer comparison 4m vs (2s+1)^2.
QuadraticSurd sqrt_dist(const Int& m);

}  // namespace absurf
