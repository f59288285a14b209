// Test-only oracles, independent of the library's arithmetic paths:
// big-integer modular arithmetic, exact rational elimination, and integer
// combinatorics via boost cpp_int.

#ifndef PADIC_TESTS_ORACLES_HPP
#define PADIC_TESTS_ORACLES_HPP

#include "padic/number.hpp"
#include "padic/rational.hpp"
#include "padic/rng.hpp"

#include <vector>

namespace padic::oracles {

inline BigInt pow_big(std::uint32_t p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

inline BigInt mod_big(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

inline int valuation_big(BigInt x, std::uint32_t p) {
  if (x == 0) return -1;
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Unit digits of a PAdicNumber as a big integer (the represented value is
/// p^valuation * this).
inline BigInt unit_value(const PAdicNumber& x) {
  BigInt acc = 0;
  const auto& d = x.unit_digits();
  for (std::size_t i = d.size(); i > 0; --i) {
    acc = acc * x.prime() + d[i - 1];
  }
  return acc;
}

/// Does the finite-precision value x agree with the exact integer
/// `expected` modulo p^{abs_precision(x)}? Also checks the valuation claim
/// whenever the oracle can see it.
inline bool matches_integer(const PAdicNumber& x, const BigInt& expected) {
  const std::uint32_t p = x.prime();
  if (x.is_exact_zero()) return expected == 0;
  const int a = x.abs_precision();
  if (x.is_zero_at_precision()) {
    if (a <= 0) return true;
    return mod_big(expected, pow_big(p, a)) == 0;
  }
  const int v = x.valuation();
  if (v < 0) return false;  // integers have nonnegative valuation
  if (a <= 0) return true;
  const BigInt modulus = pow_big(p, a);
  const BigInt got = mod_big(pow_big(p, v) * unit_value(x), modulus);
  if (mod_big(expected, modulus) != got) return false;
  // Valuation visible below precision must match exactly.
  if (expected != 0 && valuation_big(expected, p) < a) {
    return valuation_big(expected, p) == v;
  }
  return true;
}

/// Exact binomial coefficient C(n, k) over big integers.
inline BigInt binomial_big(const BigInt& n, int k) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

/// Plain forward-difference table over big integers: row n gives
/// Delta^n f(0).
inline std::vector<BigInt> difference_table(std::vector<BigInt> samples) {
  std::vector<BigInt> out;
  out.reserve(samples.size());
  for (std::size_t n = 0; n < samples.size(); ++n) {
    out.push_back(samples[0]);
    for (std::size_t i = 0; i + 1 < samples.size() - n; ++i) {
      samples[i] = samples[i + 1] - samples[i];
    }
    samples.pop_back();
  }
  return out;
}

/// Exact rational Gaussian elimination. Returns the solution of a square
/// integer system.
inline std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                            std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("oracle: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Random regular value in Z_p with uniform digits at absolute precision
/// `digits` (may come out as a zero-at-precision).
inline PAdicNumber random_ring_element(Rng& rng, std::uint32_t p, int digits) {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(digits), 0);
  for (auto& x : d) x = rng.digit(p);
  return PAdicNumber::from_absolute_digits(p, d);
}

}  // namespace padic::oracles

#endif
