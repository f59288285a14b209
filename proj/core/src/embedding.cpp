#include "padic/embedding.hpp"

#include <climits>

namespace padic {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > 1024) throw InvalidArgument("dimension out of range");
}

}  // namespace

PointND::PointND(std::uint32_t prime_in, std::vector<PAdicNumber> coords)
    : prime(prime_in), coordinates(std::move(coords)) {
  require_prime(prime);
  check_dimension(static_cast<int>(coordinates.size()));
  for (const auto& c : coordinates) {
    if (c.prime() != prime) throw InvalidArgument("mixed primes");
    if (!c.in_ring()) throw InvalidArgument("coordinates must lie in Z_p");
  }
}

PAdicNumber phi(const PAdicNumber& x, int n) {
  check_dimension(n);
  if (!x.in_ring()) throw InvalidArgument("argument must lie in Z_p");
  if (x.is_exact_zero()) return x;
  const int a = x.abs_precision();
  const int out_precision = n * a;
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(out_precision), 0);
  for (int j = 0; j < a; ++j) {
    buf[static_cast<std::size_t>(n) * static_cast<std::size_t>(j)] = x.digit_at(j);
  }
  return PAdicNumber::from_absolute_digits(x.prime(), buf);
}

PAdicNumber interleave(const PointND& x) {
  const int n = x.dimension();
  if (n == 1) return x.coordinates.front();

  // First image position whose source digit is unknown; exact-zero
  // coordinates constrain nothing.
  int out_precision = INT_MAX;
  bool all_exact_zero = true;
  for (int i = 1; i <= n; ++i) {
    const auto& c = x.coordinates[static_cast<std::size_t>(i - 1)];
    if (c.is_exact_zero()) continue;
    all_exact_zero = false;
    out_precision = std::min(out_precision, n * c.abs_precision() + i - 1);
  }
  if (all_exact_zero) return PAdicNumber::zero(x.prime);

  std::vector<std::uint32_t> buf(static_cast<std::size_t>(out_precision), 0);
  for (int pos = 0; pos < out_precision; ++pos) {
    const int i = pos % n;  // coordinate index - 1
    const int j = pos / n;  // source digit index
    const auto& c = x.coordinates[static_cast<std::size_t>(i)];
    buf[static_cast<std::size_t>(pos)] = c.is_exact_zero() ? 0 : c.digit_at(j);
  }
  return PAdicNumber::from_absolute_digits(x.prime, buf);
}

PointND deinterleave(const PAdicNumber& z, int n) {
  check_dimension(n);
  if (!z.in_ring()) throw InvalidArgument("argument must lie in Z_p");
  std::vector<PAdicNumber> coords;
  coords.reserve(static_cast<std::size_t>(n));
  if (z.is_exact_zero()) {
    for (int i = 0; i < n; ++i) coords.push_back(z);
    return PointND(z.prime(), std::move(coords));
  }
  const int a = z.abs_precision();
  for (int i = 1; i <= n; ++i) {
    const int count = a >= i ? (a - i) / n + 1 : 0;
    std::vector<std::uint32_t> buf(static_cast<std::size_t>(count), 0);
    for (int j = 0; j < count; ++j) {
      buf[static_cast<std::size_t>(j)] = z.digit_at(n * j + i - 1);
    }
    coords.push_back(PAdicNumber::from_absolute_digits(z.prime(), buf));
  }
  return PointND(z.prime(), std::move(coords));
}

}  // namespace padic
