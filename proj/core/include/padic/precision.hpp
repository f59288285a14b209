#ifndef PADIC_PRECISION_HPP
#define PADIC_PRECISION_HPP

#include "padic/errors.hpp"

namespace padic {

/// Digit budget for constructing values: M working digits that callers may
/// rely on, plus G guard digits that absorb precision loss from divisions
/// by factors of p. Values are computed at M + G digits and reported at M.
struct PrecisionPolicy {
  int working_digits;  // M
  int guard_digits;    // G

  explicit PrecisionPolicy(int m = 32, int g = 8)
      : working_digits(m), guard_digits(g) {
    if (m < 1) throw InvalidArgument("working_digits must be >= 1");
    if (g < 0) throw InvalidArgument("guard_digits must be >= 0");
  }

  int total() const { return working_digits + guard_digits; }
};

}  // namespace padic

#endif
