#ifndef PADIC_EMBEDDING_HPP
#define PADIC_EMBEDDING_HPP

#include "padic/number.hpp"

#include <vector>

namespace padic {

/// A point of Z_p^n: coordinates share one prime and all lie in Z_p.
struct PointND {
  std::uint32_t prime;
  std::vector<PAdicNumber> coordinates;

  PointND(std::uint32_t prime, std::vector<PAdicNumber> coords);

  int dimension() const { return static_cast<int>(coordinates.size()); }
};

/// Digit-spreading map: digit j of x moves to digit position n*j of the
/// result, all other positions are zero. phi(x, 1) is the identity.
PAdicNumber phi(const PAdicNumber& x, int n);

/// Sum_{i=1..n} p^{i-1} phi(x_i): digit (n*j + i - 1) of the result equals
/// digit j of coordinate i. A bijection of digit strings with no carries.
PAdicNumber interleave(const PointND& x);

/// Exact inverse of interleave: coordinate i collects the digits at
/// positions congruent to i - 1 mod n.
PointND deinterleave(const PAdicNumber& z, int n);

}  // namespace padic

#endif
