#ifndef PADIC_NUMBER_HPP
#define PADIC_NUMBER_HPP

#include "padic/precision.hpp"
#include "padic/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace padic {

/// p-adic norm of a value. When the value is indistinguishable from zero at
/// its absolute precision A, `value` is the upper bound p^{-A} and
/// `is_bound` is set; otherwise the norm is certain.
struct NormValue {
  Rational value;
  bool is_bound = false;
};

/// An element of Q_p at finite precision.
///
/// A regular value is p^v * (d0 + d1*p + d2*p^2 + ...) with d0 != 0; the
/// stored digits cover p-exponents v .. v+m-1, so the value is known modulo
/// p^A with A = v + m (the absolute precision). Three states exist:
///   - regular:            valuation v, m >= 1 unit digits, d0 != 0;
///   - zero at precision:  every digit up to p^A is zero, true valuation
///                         unknown but >= A, |x|_p <= p^{-A};
///   - exact zero:         the mathematical 0, norm exactly 0.
///
/// Arithmetic tracks precision through every operation:
///   add/sub : A = min(A_lhs, A_rhs)
///   mul     : v = v_l + v_r, unit digits = min(m_l, m_r)
///   div     : v = v_l - v_r, unit digits = min(m_l, m_r)
/// so |x*y|_p = |x|_p * |y|_p holds for certain norms and the ultrametric
/// inequality |x+y|_p <= max(|x|_p, |y|_p) holds always.
///
/// Values are immutable after construction and freely shareable across
/// threads.
class PAdicNumber {
public:
  /// Canonical base-p expansion of a machine integer, truncated to the
  /// policy digit budget. Negative integers expand via the p-adic
  /// complement (the infinite digit tail is truncated at precision).
  static PAdicNumber from_integer(long long value, std::uint32_t prime,
                                  const PrecisionPolicy& policy = PrecisionPolicy());

  /// numerator/denominator as an element of Q_p; the valuation is
  /// v_p(numerator) - v_p(denominator) and may be negative.
  static PAdicNumber from_rational(long long numerator, long long denominator,
                                   std::uint32_t prime,
                                   const PrecisionPolicy& policy = PrecisionPolicy());

  /// The exact zero (infinite valuation, norm 0).
  static PAdicNumber zero(std::uint32_t prime);

  /// A value known to vanish modulo p^abs_precision and nothing more.
  static PAdicNumber zero_at_precision(std::uint32_t prime, int abs_precision);

  /// Assemble from unit digits (least significant first, digits[0] != 0).
  static PAdicNumber from_unit_digits(std::uint32_t prime, int valuation,
                                      std::vector<std::uint32_t> digits);

  /// Assemble from digits at absolute positions 0..digits.size()-1
  /// (leading zeros become valuation); all-zero digits give a zero at
  /// precision digits.size().
  static PAdicNumber from_absolute_digits(std::uint32_t prime,
                                          const std::vector<std::uint32_t>& digits);

  /// Parse the textual encoding `p^<v> * <d0>.<d1>...` (digits decimal,
  /// least significant first) or `0`. Unit digits are padded with zeros to
  /// the policy budget: the text denotes the exact value it spells.
  static PAdicNumber parse(std::string_view text, std::uint32_t prime,
                           const PrecisionPolicy& policy = PrecisionPolicy());

  std::uint32_t prime() const { return prime_; }
  bool is_exact_zero() const { return exact_zero_; }
  /// True for both zero states: no digit distinguishes the value from 0.
  bool is_zero_at_precision() const { return digits_.empty(); }
  bool is_regular() const { return !digits_.empty(); }

  /// Valuation of a regular value; throws for either zero state.
  int valuation() const;
  /// First p-exponent at which digits are unknown; INT_MAX for exact zero.
  int abs_precision() const;
  int unit_digit_count() const { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint32_t>& unit_digits() const { return digits_; }
  /// Digit at absolute p-exponent `position` (0 outside the unit window);
  /// positions at or above abs_precision() are unknown and throw.
  std::uint32_t digit_at(int position) const;

  /// |x|_p as an exact rational, with the at-precision bound flag.
  NormValue norm() const;
  /// Z_p membership at the visible precision (norm <= 1).
  bool in_ring() const;

  PAdicNumber operator-() const;
  friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b);

  /// Drop digits at p-exponents >= abs_precision (never adds precision).
  PAdicNumber truncated_abs(int abs_precision) const;
  /// Keep at most `digit_count` unit digits.
  PAdicNumber truncated_rel(int digit_count) const;

  /// True when a - b is indistinguishable from zero at the common precision.
  bool same_value(const PAdicNumber& other) const;

  /// Structural identity (same state, valuation, digits, precision).
  bool operator==(const PAdicNumber& other) const;
  bool operator!=(const PAdicNumber& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  PAdicNumber(std::uint32_t prime, bool exact_zero, int valuation,
              std::vector<std::uint32_t> digits, int abs_precision);

  static void check_same_prime(const PAdicNumber& a, const PAdicNumber& b);

  std::uint32_t prime_;
  bool exact_zero_;
  int valuation_;      // meaningful only when digits_ is nonempty
  int abs_precision_;  // meaningful unless exact_zero_
  std::vector<std::uint32_t> digits_;
};

/// Trial-division primality check for digit moduli.
bool is_prime(std::uint32_t p);

/// Throws InvalidArgument unless p is a supported prime.
void require_prime(std::uint32_t p);

/// v_p(value) for a nonzero machine integer.
int integer_valuation(long long value, std::uint32_t prime);

}  // namespace padic

#endif
