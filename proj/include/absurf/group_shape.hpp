#pragma once

// G(n1,n2,n3,n4) = Z/n1 x Z/n1n2 x Z/n1n2n3 x Z/n1n2n3n4, the canonical
// parameterization of a finite abelian group of rank <= 4.

#include <array>
#include <vector>

#include "absurf/intarith.hpp"

namespace absurf {

struct GroupShape {
  Int n1 = 1, n2 = 1, n3 = 1, n4 = 1;

  // N = n1^4 n2^3 n3^2 n4
  Int order() const;

  // invariant-factor chain d1 | d2 | d3 | d4
  std::array<Int, 4> invariant_factors() const;

  // exponents of the ell-primary component, ascending (zero padded)
  std::array<unsigned long, 4> ell_exponents(const Int& ell) const;

  // primes dividing the order
  std::vector<Int> prime_support() const;

  static GroupShape from_invariant_factors(const std::array<Int, 4>& d);

  // Direct sum of cyclic groups of the given orders (rank after dropping
  // trivial factors must be <= 4).
  static GroupShape from_cyclic_orders(std::vector<Int> orders);

  bool operator==(const GroupShape& o) const {
    return n1 == o.n1 && n2 == o.n2 && n3 == o.n3 && n4 == o.n4;
  }
  bool operator<(const GroupShape& o) const;

  std::string str() const;
};

}  // namespace absurf
