#include "absurf/intarith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace absurf {

namespace {

bool fits_u64(const Int& n) { return n >= 0 && n.fits_ulong_p(); }

}  // namespace

// ---------------------------------------------------------------------------
// primes and factorization

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  Int d = 3;
  while (d * d <= n) {
    if (d > kTrialDivisionLimit)
      throw factor_limit_error("primality of " + n.get_str() +
                               " exceeds the trial-division limit");
    if (n % d == 0) return false;
    d += 2;
  }
  return true;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: need n >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(2);
  Int d = 3;
  while (d * d <= m) {
    if (d > kTrialDivisionLimit) break;
    strip(d);
    d += 2;
  }
  if (m > 1) {
    // No factor <= min(sqrt(m), limit) remains: m is prime if it fits below
    // limit^2, otherwise its status is unknown.
    if (d * d <= m)
      throw factor_limit_error("factorize: cofactor " + m.get_str() +
                               " exceeds the trial-division limit");
    out.emplace_back(m, 1);
  }
  return out;
}

std::optional<PrimePower> as_prime_power(const Int& q) {
  if (q < 2) throw std::invalid_argument("as_prime_power: need q >= 2");
  auto fs = factorize(q);
  if (fs.size() != 1) return std::nullopt;
  return PrimePower{q, fs[0].first, fs[0].second};
}

PrimePower require_prime_power(const Int& q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument(q.get_str() + " is not a prime power");
  return *pp;
}

const std::vector<uint32_t>& primes_up_to(uint32_t limit) {
  static std::mutex mu;
  static std::vector<uint32_t> primes;
  static uint32_t sieved_to = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (limit > sieved_to) {
    uint32_t hi = std::max<uint32_t>(limit, 1u << 10);
    std::vector<bool> composite(hi + 1, false);
    primes.clear();
    for (uint32_t i = 2; i <= hi; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j <= hi; j += i) composite[j] = true;
    }
    sieved_to = hi;
  }
  return primes;
}

std::vector<PrimePower> prime_powers_in(const Int& lo_in, const Int& hi_in) {
  Int lo = lo_in < 2 ? Int(2) : lo_in;
  if (hi_in < lo) return {};
  if (!fits_u64(hi_in) || hi_in > Int(kTrialDivisionLimit) * Int(kTrialDivisionLimit))
    throw factor_limit_error("prime_powers_in: range end beyond sieve capability");
  uint64_t lo64 = mpz_get_ui(lo.get_mpz_t());
  uint64_t hi64 = mpz_get_ui(hi_in.get_mpz_t());
  uint64_t width = hi64 - lo64 + 1;
  if (width > (1ull << 28))
    throw std::invalid_argument("prime_powers_in: window too wide");

  Int root = isqrt(hi_in);
  const auto& ps = primes_up_to(uint32_t(mpz_get_ui(root.get_mpz_t())) + 1);

  std::vector<bool> composite(width, false);
  for (uint32_t p : ps) {
    uint64_t p2 = uint64_t(p) * p;
    if (p2 > hi64 && uint64_t(p) > hi64) break;
    uint64_t start = std::max<uint64_t>(p2, ((lo64 + p - 1) / p) * p);
    for (uint64_t j = start; j <= hi64; j += p) composite[j - lo64] = true;
  }

  std::vector<PrimePower> out;
  for (uint64_t v = lo64; v <= hi64; ++v)
    if (!composite[v - lo64] && v >= 2) out.push_back(PrimePower{Int(v), Int(v), 1});

  // proper powers p^r, r >= 2
  for (uint32_t p : ps) {
    uint64_t p2 = uint64_t(p) * p;
    if (p2 > hi64) break;
    Int pw = Int(p) * Int(p);
    unsigned r = 2;
    while (pw <= hi_in) {
      if (pw >= lo) out.push_back(PrimePower{pw, Int(p), r});
      pw *= p;
      ++r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// roots

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

Int iroot(const Int& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("iroot: negative input");
  if (k == 0) throw std::invalid_argument("iroot: k = 0");
  Int s;
  mpz_root(s.get_mpz_t(), n.get_mpz_t(), k);
  return s;
}

Int ceil_root(const Int& n, unsigned k) {
  Int t = iroot(n, k);
  Int tk;
  mpz_pow_ui(tk.get_mpz_t(), t.get_mpz_t(), k);
  if (tk < n) ++t;
  return t;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::pair<Int, Int> squarefree_decompose(const Int& m) {
  if (m < 0) throw std::invalid_argument("squarefree_decompose: negative input");
  if (m == 0) return {Int(0), Int(1)};
  if (is_perfect_square(m)) return {Int(1), isqrt(m)};
  Int core = 1, sq = 1;
  for (const auto& [p, e] : factorize(m)) {
    if (e % 2) core *= p;
    if (e / 2 > 0) {
      Int half;
      mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
      sq *= half;
    }
  }
  return {core, sq};
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// p-adic valuation

unsigned long Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation::value on +infinity");
  return v_;
}

Valuation nu(const Int& p, const Int& n) {
  if (!is_prime(p)) throw std::invalid_argument("nu: p must be prime");
  if (n == 0) return Valuation::infinity();
  Int m = n < 0 ? Int(-n) : n;
  unsigned long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return Valuation::finite(v);
}

bool is_square_in_zp(const Int& p, const Int& x) {
  if (!is_prime(p)) throw std::invalid_argument("is_square_in_zp: p must be prime");
  if (x == 0) return true;
  Int u = x;
  unsigned long e = 0;
  while (u % p == 0) {
    u /= p;
    ++e;
  }
  if (e % 2) return false;
  if (p == 2) return mod_floor(u, 8) == 1;
  // odd p: unit part must be a quadratic residue
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
}

// ---------------------------------------------------------------------------
// polynomials

Int poly_eval(const Poly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_derivative(const Poly& f) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(Int(long(i)) * f[i]);
  if (d.empty()) d.push_back(0);
  return d;
}

namespace {

// Bareiss fraction-free determinant; exact over Z.
Int det_bareiss(std::vector<std::vector<Int>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Int resultant(const Poly& f, const Poly& g) {
  size_t n = f.size() - 1, m = g.size() - 1;
  if (n == 0 || m == 0) {
    // res(f, c) = c^deg(f)
    Int out;
    const Poly& c = (m == 0) ? g : f;
    const size_t d = (m == 0) ? n : m;
    mpz_pow_ui(out.get_mpz_t(), c[0].get_mpz_t(), d);
    return out;
  }
  size_t dim = n + m;
  std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
  for (size_t row = 0; row < m; ++row)
    for (size_t j = 0; j <= n; ++j) s[row][row + j] = f[n - j];
  for (size_t row = 0; row < n; ++row)
    for (size_t j = 0; j <= m; ++j) s[m + row][row + j] = g[m - j];
  return det_bareiss(std::move(s));
}

}  // namespace

Int poly_disc(const Poly& f) {
  if (f.empty() || f.back() == 0)
    throw std::invalid_argument("poly_disc: leading coefficient must be nonzero");
  size_t n = f.size() - 1;
  if (n <= 1) return 1;
  Int res = resultant(f, poly_derivative(f));
  Int d = res / f.back();
  return ((n * (n - 1) / 2) % 2) ? Int(-d) : d;
}

namespace {

// all rho in [0, p) with g(rho) = 0 mod p
std::vector<Int> roots_mod_p(const Poly& g, const Int& p) {
  std::vector<Int> out;
  if (p.fits_ulong_p() && mpz_get_ui(p.get_mpz_t()) < (1ul << 31)) {
    uint64_t pp = mpz_get_ui(p.get_mpz_t());
    std::vector<uint64_t> c(g.size());
    for (size_t i = 0; i < g.size(); ++i)
      c[i] = mpz_fdiv_ui(g[i].get_mpz_t(), pp);
    for (uint64_t x = 0; x < pp; ++x) {
      uint64_t acc = 0;
      for (size_t i = g.size(); i-- > 0;)
        acc = (unsigned __int128)(acc)*x % pp + c[i], acc %= pp;
      if (acc == 0) out.push_back(Int(x));
    }
  } else {
    for (Int x = 0; x < p; ++x)
      if (mod_floor(poly_eval(g, x), p) == 0) out.push_back(x);
  }
  return out;
}

bool has_root_rec(const Poly& f, const Int& p, unsigned depth_left) {
  Poly df = poly_derivative(f);
  for (const Int& rho : roots_mod_p(f, p)) {
    if (mod_floor(poly_eval(df, rho), p) != 0) return true;  // Hensel lifts
    if (depth_left == 0)
      throw std::logic_error("has_root_in_zp: recursion exceeded the discriminant bound");
    // substitute T = rho + pT and strip the maximal p-power;
    // f(rho + X) = sum_k f^(k)(rho)/k! X^k (the divisions are exact)
    Poly g(f.size(), Int(0));
    Poly deriv = f;
    Int fact = 1;
    for (size_t k = 0; k < f.size(); ++k) {
      if (k > 0) fact *= long(k);
      g[k] = poly_eval(deriv, rho) / fact;
      deriv = poly_derivative(deriv);
    }
    // scale X -> pT
    Int pk = 1;
    for (size_t k = 0; k < g.size(); ++k) {
      g[k] *= pk;
      pk *= p;
    }
    // strip content p-power (>= p: constant term and all higher terms carry p)
    bool all_zero = true;
    for (const Int& c : g) all_zero = all_zero && c == 0;
    if (all_zero) throw std::logic_error("has_root_in_zp: zero shift polynomial");
    unsigned long strip = ~0ul;
    for (const Int& c : g) {
      if (c == 0) continue;
      Valuation v = nu(p, c);
      strip = std::min(strip, v.value());
    }
    Int pstrip;
    mpz_pow_ui(pstrip.get_mpz_t(), p.get_mpz_t(), strip);
    for (Int& c : g) c /= pstrip;
    while (g.size() > 1 && g.back() == 0) g.pop_back();
    if (has_root_rec(g, p, depth_left - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_root_in_zp(const Int& p, const Poly& f) {
  if (!is_prime(p)) throw std::invalid_argument("has_root_in_zp: p must be prime");
  if (f.empty() || f.back() != 1)
    throw std::invalid_argument("has_root_in_zp: polynomial must be monic");
  if (f.size() == 1) return false;
  Int disc = poly_disc(f);
  if (disc == 0)
    throw inapplicable_error("has_root_in_zp: zero discriminant, criterion inapplicable");
  unsigned long budget = nu(p, disc).value() + 8;
  return has_root_rec(f, p, budget);
}

// ---------------------------------------------------------------------------
// radicals

namespace {
int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
}  // namespace

int cmp_sqrt_rat(const Int& m, const Rat& t) {
  if (m < 0) throw std::invalid_argument("cmp_sqrt_rat: negative radicand");
  if (sgn(t) <= 0) return (m == 0 && sgn(t) == 0) ? 0 : 1;
  // both sides positive (or m = 0): compare m vs t^2
  Int lhs = m * t.get_den() * t.get_den();
  Int rhs = t.get_num() * t.get_num();
  return cmp(lhs, rhs);
}

namespace {

// sign of c0 + c*sqrt(core), core square-free >= 2, exact by squaring
int surd_sign_one(const Rat& c0, const Rat& c, const Int& core) {
  int s0 = sgn(c0), s1 = sgn(c);
  if (s1 == 0) return s0;
  if (s0 == 0) return s1;
  if (s0 == s1) return s0;
  // opposite signs: |c0| vs |c| sqrt(core)  <=>  c0^2 vs c^2 core
  Rat lhs = c0 * c0;
  Rat rhs = c * c * Rat(core);
  int c2 = cmp(lhs, rhs);
  return c2 == 0 ? 0 : (c2 > 0 ? s0 : s1);
}

}  // namespace

int radical_sign(const Rat& c0_in, std::vector<RadicalTerm> terms) {
  Rat c0 = c0_in;
  std::map<Int, Rat> by_core;
  for (auto& t : terms) {
    if (t.radicand < 0) throw std::invalid_argument("radical_sign: negative radicand");
    if (sgn(t.coeff) == 0 || t.radicand == 0) continue;
    auto [core, sq] = squarefree_decompose(t.radicand);
    Rat c = t.coeff * Rat(sq);
    if (core == 1)
      c0 += c;
    else
      by_core[core] += c;
  }
  for (auto it = by_core.begin(); it != by_core.end();)
    it = sgn(it->second) == 0 ? by_core.erase(it) : std::next(it);

  if (by_core.empty()) return sgn(c0);
  if (by_core.size() == 1) {
    const auto& [core, c] = *by_core.begin();
    return surd_sign_one(c0, c, core);
  }
  // Distinct square-free radicands have Q-linearly-independent roots, so the
  // value is zero only with all coefficients zero; otherwise rational
  // interval refinement separates it from zero.
  for (unsigned long prec = 64; prec <= (1ul << 20); prec *= 2) {
    Rat lo = c0, hi = c0;
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), prec);
    for (const auto& [core, c] : by_core) {
      Int shifted = core;
      mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), 2 * prec);
      Int u = isqrt(shifted);
      Rat root_lo(u, scale), root_hi(u + 1, scale);
      root_lo.canonicalize();
      root_hi.canonicalize();
      if (sgn(c) > 0) {
        lo += c * root_lo;
        hi += c * root_hi;
      } else {
        lo += c * root_hi;
        hi += c * root_lo;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::logic_error("radical_sign: refinement cap hit on a nonzero value");
}

QuadraticSurd::QuadraticSurd(Rat a, Rat b, Int m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (m_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
  if (m_ == 0 || sgn(b_) == 0) {
    b_ = 0;
    m_ = 0;
    return;
  }
  auto [core, sq] = squarefree_decompose(m_);
  b_ *= Rat(sq);
  m_ = core;
  if (m_ == 1) {
    a_ += b_;
    b_ = 0;
    m_ = 0;
  }
}

int QuadraticSurd::sign() const {
  if (is_rational()) return sgn(a_);
  return surd_sign_one(a_, b_, m_);
}

int QuadraticSurd::cmp(const QuadraticSurd& o) const {
  if (m_ == o.m_) {
    QuadraticSurd d(a_ - o.a_, b_ - o.b_, m_);
    return d.sign();
  }
  return radical_sign(a_ - o.a_, {{b_, m_}, {-o.b_, o.m_}});
}

int QuadraticSurd::cmp(const Rat& t) const {
  QuadraticSurd d(a_ - t, b_, m_);
  return d.sign();
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd out;
  out.a_ = -a_;
  out.b_ = -b_;
  out.m_ = m_;
  return out;
}

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  if (is_rational()) return QuadraticSurd(a_ + o.a_, o.b_, o.m_);
  if (o.is_rational()) return QuadraticSurd(a_ + o.a_, b_, m_);
  if (m_ != o.m_) throw std::invalid_argument("QuadraticSurd: mixed-radicand sum");
  return QuadraticSurd(a_ + o.a_, b_ + o.b_, m_);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const { return *this + (-o); }

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  if (is_rational()) return QuadraticSurd(a_ * o.a_, a_ * o.b_, o.m_);
  if (o.is_rational()) return QuadraticSurd(a_ * o.a_, b_ * o.a_, m_);
  if (m_ != o.m_) throw std::invalid_argument("QuadraticSurd: mixed-radicand product");
  return QuadraticSurd(a_ * o.a_ + b_ * o.b_ * Rat(m_), a_ * o.b_ + b_ * o.a_, m_);
}

QuadraticSurd QuadraticSurd::operator*(const Rat& s) const {
  QuadraticSurd out;
  out.a_ = a_ * s;
  out.b_ = b_ * s;
  out.m_ = sgn(out.b_) == 0 ? Int(0) : m_;
  return out;
}

QuadraticSurd QuadraticSurd::pow(unsigned e) const {
  QuadraticSurd acc{Rat(1)};
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

double QuadraticSurd::approx() const {
  double v = a_.get_d();
  if (!is_rational()) v += b_.get_d() * std::sqrt(m_.get_d());
  return v;
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return a_.get_str();
  return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + m_.get_str() + ")";
}

QuadraticSurd sqrt_dist(const Int& m) {
  if (m < 0) throw std::invalid_argument("sqrt_dist: negative input");
  if (is_perfect_square(m)) return QuadraticSurd(Rat(0));
  Int s = isqrt(m);
  Int two_s_plus_1_sq = (2 * s + 1) * (2 * s + 1);
  if (4 * m < two_s_plus_1_sq)  // equality impossible by parity
    return QuadraticSurd(Rat(-s), Rat(1), m);
  return QuadraticSurd(Rat(s + 1), Rat(-1), m);
}

}  // namespace absurf
