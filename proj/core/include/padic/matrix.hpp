#ifndef PADIC_MATRIX_HPP
#define PADIC_MATRIX_HPP

#include "padic/number.hpp"

#include <vector>

namespace padic {

/// Dense row-major matrix over Q_p. All entries share one prime.
class PAdicMatrix {
public:
  PAdicMatrix(std::uint32_t prime, int rows, int cols);

  std::uint32_t prime() const { return prime_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const PAdicNumber& at(int r, int c) const;
  void set(int r, int c, PAdicNumber value);

  static PAdicMatrix identity(std::uint32_t prime, int n,
                              const PrecisionPolicy& policy = PrecisionPolicy());

  friend PAdicMatrix operator*(const PAdicMatrix& a, const PAdicMatrix& b);

private:
  std::uint32_t prime_;
  int rows_;
  int cols_;
  std::vector<PAdicNumber> entries_;
};

/// Solution of a square system together with the determinant data the
/// elimination produces for free.
struct LinearSolveResult {
  std::vector<PAdicNumber> solution;
  Rational det_norm;   // |det A|_p
  int det_valuation;   // v_p(det A)
};

/// Gaussian elimination with maximum-norm (minimum-valuation) pivoting;
/// ties break toward the lowest row index. Throws NumericError when some
/// pivot column is indistinguishable from zero at working precision.
LinearSolveResult solve_linear_with_det(const PAdicMatrix& a,
                                        const std::vector<PAdicNumber>& rhs);

std::vector<PAdicNumber> solve_linear(const PAdicMatrix& a,
                                      const std::vector<PAdicNumber>& rhs);

/// |det A|_p as the product of pivot norms; throws NumericError when the
/// matrix is singular at precision.
Rational det_norm(const PAdicMatrix& a);

}  // namespace padic

#endif
