#ifndef PADIC_MAHLER_HPP
#define PADIC_MAHLER_HPP

#include "padic/number.hpp"

#include <vector>

namespace padic {

/// Truncated coefficient vector w_0..w_K of a series in the binomial basis.
struct MahlerSeries {
  std::uint32_t prime;
  std::vector<PAdicNumber> weights;

  int degree() const { return static_cast<int>(weights.size()) - 1; }

  /// All weights have norm <= 1 at visible precision.
  bool is_integral() const;
};

/// v_p(k!) by Legendre's formula, (k - digit_sum_p(k)) / (p - 1).
int factorial_valuation(std::uint32_t prime, int k);

/// Binomial-basis polynomial C(x, k) evaluated by the multiplicative
/// recurrence w_0 = 1, w_k = w_{k-1} * (x - k + 1) / k. Requires x in Z_p
/// and a guard budget covering v_p(k!); throws NumericError otherwise.
PAdicNumber omega(int k, const PAdicNumber& x,
                  const PrecisionPolicy& policy = PrecisionPolicy());

/// All of C(x, 0..degree) in one recurrence pass.
std::vector<PAdicNumber> omega_row(int degree, const PAdicNumber& x,
                                   const PrecisionPolicy& policy = PrecisionPolicy());

/// Coefficients from samples f(0), f(1), ..., f(K) at consecutive integer
/// points, via the in-place forward-difference table (w_n = Delta^n f(0)).
MahlerSeries mahler_coefficients(const std::vector<PAdicNumber>& samples);

/// Sum_{k=0..K} w_k C(x, k) by plain summation (ultrametric addition does
/// not amplify error).
PAdicNumber eval_series(const MahlerSeries& series, const PAdicNumber& x,
                        const PrecisionPolicy& policy = PrecisionPolicy());

}  // namespace padic

#endif
