#include "padic/matrix.hpp"

#include <utility>

namespace padic {

PAdicMatrix::PAdicMatrix(std::uint32_t prime, int rows, int cols)
    : prime_(prime), rows_(rows), cols_(cols) {
  require_prime(prime);
  if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  PAdicNumber::zero(prime));
}

const PAdicNumber& PAdicMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw InvalidArgument("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
}

void PAdicMatrix::set(int r, int c, PAdicNumber value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw InvalidArgument("matrix index out of range");
  }
  if (value.prime() != prime_) throw InvalidArgument("mixed primes");
  entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c)] = std::move(value);
}

PAdicMatrix PAdicMatrix::identity(std::uint32_t prime, int n,
                                  const PrecisionPolicy& policy) {
  PAdicMatrix m(prime, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, PAdicNumber::from_integer(1, prime, policy));
  return m;
}

PAdicMatrix operator*(const PAdicMatrix& a, const PAdicMatrix& b) {
  if (a.prime_ != b.prime_) throw InvalidArgument("mixed primes");
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimension mismatch");
  PAdicMatrix out(a.prime_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      PAdicNumber acc = PAdicNumber::zero(a.prime_);
      for (int k = 0; k < a.cols_; ++k) {
        acc = acc + a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

namespace {

// Lower valuation means larger norm; values without a visible leading digit
// can never be chosen as pivots.
bool better_pivot(const PAdicNumber& candidate, const PAdicNumber& best) {
  if (!candidate.is_regular()) return false;
  if (!best.is_regular()) return true;
  return candidate.valuation() < best.valuation();
}

}  // namespace

LinearSolveResult solve_linear_with_det(const PAdicMatrix& a,
                                        const std::vector<PAdicNumber>& rhs) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix must be square");
  const int n = a.rows();
  if (static_cast<int>(rhs.size()) != n) {
    throw InvalidArgument("right-hand side size mismatch");
  }
  const std::uint32_t p = a.prime();
  for (const auto& v : rhs) {
    if (v.prime() != p) throw InvalidArgument("mixed primes");
  }

  // Working copy: rows of [A | b].
  std::vector<std::vector<PAdicNumber>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<PAdicNumber> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) row.push_back(a.at(i, j));
    row.push_back(rhs[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(row));
  }

  int det_valuation = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_regular()) continue;
      if (pivot < 0 || better_pivot(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                                    rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)])) {
        pivot = r;
      }
    }
    if (pivot < 0) {
      throw NumericError("matrix singular at working precision (column " +
                         std::to_string(col) + ")");
    }
    std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(pivot)]);
    const PAdicNumber& pv = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det_valuation += pv.valuation();
    for (int r = col + 1; r < n; ++r) {
      const PAdicNumber& lead = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (!lead.is_regular()) continue;
      const PAdicNumber mult = lead / pv;  // valuation >= 0 by pivot choice
      for (int c = col; c <= n; ++c) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            mult * rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }

  std::vector<PAdicNumber> solution(static_cast<std::size_t>(n), PAdicNumber::zero(p));
  for (int i = n - 1; i >= 0; --i) {
    PAdicNumber acc = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    for (int j = i + 1; j < n; ++j) {
      acc = acc - rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                      solution[static_cast<std::size_t>(j)];
    }
    solution[static_cast<std::size_t>(i)] =
        acc / rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }

  LinearSolveResult result{std::move(solution), prime_power(p, -det_valuation),
                           det_valuation};
  return result;
}

std::vector<PAdicNumber> solve_linear(const PAdicMatrix& a,
                                      const std::vector<PAdicNumber>& rhs) {
  return solve_linear_with_det(a, rhs).solution;
}

Rational det_norm(const PAdicMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix must be square");
  const int n = a.rows();
  std::vector<std::vector<PAdicNumber>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<PAdicNumber> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  int det_valuation = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_regular()) continue;
      if (pivot < 0 || better_pivot(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                                    rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)])) {
        pivot = r;
      }
    }
    if (pivot < 0) {
      throw NumericError("matrix singular at working precision (column " +
                         std::to_string(col) + ")");
    }
    std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(pivot)]);
    const PAdicNumber& pv = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det_valuation += pv.valuation();
    for (int r = col + 1; r < n; ++r) {
      const PAdicNumber& lead = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (!lead.is_regular()) continue;
      const PAdicNumber mult = lead / pv;
      for (int c = col; c < n; ++c) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
            mult * rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  return prime_power(a.prime(), -det_valuation);
}

}  // namespace padic
