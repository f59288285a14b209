#include "padic/mahler.hpp"

namespace padic {

bool MahlerSeries::is_integral() const {
  for (const auto& w : weights) {
    if (!w.in_ring()) return false;
  }
  return true;
}

int factorial_valuation(std::uint32_t prime, int k) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  int digit_sum = 0;
  for (int m = k; m > 0; m /= static_cast<int>(prime)) {
    digit_sum += m % static_cast<int>(prime);
  }
  return (k - digit_sum) / (static_cast<int>(prime) - 1);
}

namespace {

void check_in_ring(const PAdicNumber& x) {
  if (!x.in_ring()) throw InvalidArgument("argument must lie in Z_p");
}

void check_guard(int k, const PAdicNumber& x, const PrecisionPolicy& policy) {
  const int need = factorial_valuation(x.prime(), k);
  if (need > policy.guard_digits) {
    throw NumericError("insufficient guard digits for omega_" + std::to_string(k) +
                       ": need " + std::to_string(need) + ", have " +
                       std::to_string(policy.guard_digits));
  }
}

}  // namespace

std::vector<PAdicNumber> omega_row(int degree, const PAdicNumber& x,
                                   const PrecisionPolicy& policy) {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  check_in_ring(x);
  check_guard(degree, x, policy);
  const std::uint32_t p = x.prime();
  std::vector<PAdicNumber> row;
  row.reserve(static_cast<std::size_t>(degree) + 1);
  row.push_back(PAdicNumber::from_integer(1, p, policy));
  for (int k = 1; k <= degree; ++k) {
    const PAdicNumber factor = x - PAdicNumber::from_integer(k - 1, p, policy);
    const PAdicNumber divisor = PAdicNumber::from_integer(k, p, policy);
    row.push_back(row.back() * factor / divisor);
  }
  return row;
}

PAdicNumber omega(int k, const PAdicNumber& x, const PrecisionPolicy& policy) {
  return omega_row(k, x, policy).back();
}

MahlerSeries mahler_coefficients(const std::vector<PAdicNumber>& samples) {
  if (samples.empty()) throw InvalidArgument("at least one sample required");
  const std::uint32_t p = samples.front().prime();
  for (const auto& s : samples) {
    if (s.prime() != p) throw InvalidArgument("mixed primes");
    check_in_ring(s);
  }
  std::vector<PAdicNumber> table = samples;
  const int k = static_cast<int>(samples.size()) - 1;
  for (int step = 1; step <= k; ++step) {
    for (int i = k; i >= step; --i) {
      table[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(i)] -
                                           table[static_cast<std::size_t>(i - 1)];
    }
  }
  return MahlerSeries{p, std::move(table)};
}

PAdicNumber eval_series(const MahlerSeries& series, const PAdicNumber& x,
                        const PrecisionPolicy& policy) {
  if (series.weights.empty()) throw InvalidArgument("series has no weights");
  if (series.prime != x.prime()) throw InvalidArgument("mixed primes");
  check_in_ring(x);
  const auto basis = omega_row(series.degree(), x, policy);
  PAdicNumber acc = PAdicNumber::zero(x.prime());
  for (std::size_t i = 0; i < series.weights.size(); ++i) {
    acc = acc + series.weights[i] * basis[i];
  }
  return acc;
}

}  // namespace padic
