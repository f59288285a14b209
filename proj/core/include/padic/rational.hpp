#ifndef PADIC_RATIONAL_HPP
#define PADIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace padic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p^e as an exact rational; e may be negative.
inline Rational prime_power(std::uint32_t p, long e) {
  BigInt num = 1;
  BigInt base = p;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) num *= base;
  if (e < 0) return Rational(BigInt(1), num);
  return Rational(num);
}

inline BigInt big_pow(std::uint32_t p, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

/// Canonical "num/den" rendering (denominator always present, "0/1" for zero).
inline std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace padic

#endif
