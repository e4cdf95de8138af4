#include "absurf/group_shape.hpp"

#include <algorithm>
#include <map>

namespace absurf {

Int GroupShape::order() const {
  return n1 * n1 * n1 * n1 * n2 * n2 * n2 * n3 * n3 * n4;
}

std::array<Int, 4> GroupShape::invariant_factors() const {
  Int d1 = n1;
  Int d2 = d1 * n2;
  Int d3 = d2 * n3;
  Int d4 = d3 * n4;
  return {d1, d2, d3, d4};
}

std::array<unsigned long, 4> GroupShape::ell_exponents(const Int& ell) const {
  auto d = invariant_factors();
  std::array<unsigned long, 4> out{};
  for (size_t i = 0; i < 4; ++i) out[i] = nu(ell, d[i]).value();
  return out;
}

std::vector<Int> GroupShape::prime_support() const {
  std::map<Int, bool> seen;
  for (const Int* n : {&n1, &n2, &n3, &n4})
    for (const auto& [p, e] : factorize(*n)) seen[p] = true;
  std::vector<Int> out;
  for (const auto& [p, _] : seen) out.push_back(p);
  return out;
}

GroupShape GroupShape::from_invariant_factors(const std::array<Int, 4>& d) {
  for (const Int& x : d)
    if (x < 1) throw std::invalid_argument("invariant factors must be positive");
  for (size_t i = 0; i + 1 < 4; ++i)
    if (d[i + 1] % d[i] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  return GroupShape{d[0], d[1] / d[0], d[2] / d[1], d[3] / d[2]};
}

GroupShape GroupShape::from_cyclic_orders(std::vector<Int> orders) {
  // collect prime exponents, largest into the largest invariant factor
  std::map<Int, std::vector<unsigned>> exps;
  for (const Int& n : orders) {
    if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
    for (const auto& [p, e] : factorize(n)) exps[p].push_back(e);
  }
  std::array<Int, 4> d{1, 1, 1, 1};
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<unsigned>());
    if (es.size() > 4)
      throw std::invalid_argument("group has rank > 4 at prime " + p.get_str());
    for (size_t i = 0; i < es.size(); ++i) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[i]);
      d[3 - i] *= pe;
    }
  }
  return from_invariant_factors(d);
}

bool GroupShape::operator<(const GroupShape& o) const {
  if (n1 != o.n1) return n1 < o.n1;
  if (n2 != o.n2) return n2 < o.n2;
  if (n3 != o.n3) return n3 < o.n3;
  return n4 < o.n4;
}

std::string GroupShape::str() const {
  return "(" + n1.get_str() + "," + n2.get_str() + "," + n3.get_str() + "," + n4.get_str() + ")";
}

}  // namespace absurf
