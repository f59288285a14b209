#include "padic/number.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <climits>
#include <sstream>

namespace padic {

namespace {

constexpr std::uint32_t kMaxPrime = 1u << 20;
constexpr int kMaxDigits = 1 << 16;

void check_digit_budget(int n) {
  if (n > kMaxDigits) throw InvalidArgument("digit budget too large");
}

// digits := p^len - digits, i.e. the p-adic negation of the unit part.
// Preserves digits[0] != 0.
void complement_in_place(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (auto& d : digits) d = p - 1 - d;
  for (auto& d : digits) {
    if (d + 1 < p) {
      d += 1;
      return;
    }
    d = 0;
  }
}

std::vector<std::uint32_t> expand_magnitude(unsigned long long u, std::uint32_t p,
                                            int cap) {
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(cap), 0);
  for (int i = 0; i < cap && u != 0; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(u % p);
    u /= p;
  }
  return digits;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  long long t = 0, newt = 1;
  long long r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  assert(r == 1);
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// First `out_digits` digits of the unit product a*b.
std::vector<std::uint32_t> unit_mul(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b,
                                    int out_digits, std::uint32_t p) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(out_digits), 0);
  unsigned long long carry = 0;
  for (int t = 0; t < out_digits; ++t) {
    unsigned long long acc = carry;
    const int ilo = std::max(0, t - static_cast<int>(b.size()) + 1);
    const int ihi = std::min(t, static_cast<int>(a.size()) - 1);
    for (int i = ilo; i <= ihi; ++i) {
      acc += static_cast<unsigned long long>(a[static_cast<std::size_t>(i)]) *
             b[static_cast<std::size_t>(t - i)];
    }
    out[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(acc % p);
    carry = acc / p;
  }
  return out;
}

// First `out_digits` digits of the unit quotient a/b (b[0] != 0).
std::vector<std::uint32_t> unit_div(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::uint32_t>& b,
                                    int out_digits, std::uint32_t p) {
  std::vector<std::uint32_t> rem(a.begin(),
                                 a.begin() + std::min<std::size_t>(a.size(),
                                                                   static_cast<std::size_t>(out_digits)));
  rem.resize(static_cast<std::size_t>(out_digits), 0);
  std::vector<std::uint32_t> q(static_cast<std::size_t>(out_digits), 0);
  const std::uint32_t inv0 = mod_inverse(b[0], p);
  for (int i = 0; i < out_digits; ++i) {
    const std::uint32_t qi = static_cast<std::uint32_t>(
        (static_cast<unsigned long long>(rem[static_cast<std::size_t>(i)]) * inv0) % p);
    q[static_cast<std::size_t>(i)] = qi;
    if (qi == 0) continue;
    long long borrow = 0;
    for (int j = 0; i + j < out_digits; ++j) {
      const long long bj = j < static_cast<int>(b.size())
                               ? static_cast<long long>(b[static_cast<std::size_t>(j)])
                               : 0;
      long long cur = static_cast<long long>(rem[static_cast<std::size_t>(i + j)]) -
                      static_cast<long long>(qi) * bj - borrow;
      borrow = 0;
      if (cur < 0) {
        const long long k = (-cur + p - 1) / p;
        cur += k * static_cast<long long>(p);
        borrow = k;
      }
      rem[static_cast<std::size_t>(i + j)] = static_cast<std::uint32_t>(cur);
    }
  }
  return q;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  if (p > kMaxPrime) {
    throw InvalidArgument("prime too large for digit arithmetic");
  }
}

int integer_valuation(long long value, std::uint32_t prime) {
  if (value == 0) throw InvalidArgument("valuation of zero is infinite");
  unsigned long long mag = value < 0 ? 0ULL - static_cast<unsigned long long>(value)
                                     : static_cast<unsigned long long>(value);
  int v = 0;
  while (mag % prime == 0) {
    mag /= prime;
    ++v;
  }
  return v;
}

PAdicNumber::PAdicNumber(std::uint32_t prime, bool exact_zero, int valuation,
                         std::vector<std::uint32_t> digits, int abs_precision)
    : prime_(prime),
      exact_zero_(exact_zero),
      valuation_(valuation),
      abs_precision_(abs_precision),
      digits_(std::move(digits)) {
  assert(digits_.empty() || digits_[0] != 0);
  assert(digits_.empty() || abs_precision_ == valuation_ + static_cast<int>(digits_.size()));
}

PAdicNumber PAdicNumber::zero(std::uint32_t prime) {
  require_prime(prime);
  return PAdicNumber(prime, true, 0, {}, INT_MAX);
}

PAdicNumber PAdicNumber::zero_at_precision(std::uint32_t prime, int abs_precision) {
  require_prime(prime);
  return PAdicNumber(prime, false, 0, {}, abs_precision);
}

PAdicNumber PAdicNumber::from_integer(long long value, std::uint32_t prime,
                                      const PrecisionPolicy& policy) {
  require_prime(prime);
  check_digit_budget(policy.total());
  if (value == 0) return zero(prime);
  const bool negative = value < 0;
  unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(value)
                                    : static_cast<unsigned long long>(value);
  int v = 0;
  while (mag % prime == 0) {
    mag /= prime;
    ++v;
  }
  const int cap = policy.total();
  auto digits = expand_magnitude(mag, prime, cap);
  if (negative) complement_in_place(digits, prime);
  return PAdicNumber(prime, false, v, std::move(digits), v + cap);
}

PAdicNumber PAdicNumber::from_rational(long long numerator, long long denominator,
                                       std::uint32_t prime,
                                       const PrecisionPolicy& policy) {
  require_prime(prime);
  check_digit_budget(policy.total());
  if (denominator == 0) throw InvalidArgument("zero denominator");
  if (numerator == 0) return zero(prime);
  const bool negative = (numerator < 0) != (denominator < 0);
  unsigned long long a = numerator < 0 ? 0ULL - static_cast<unsigned long long>(numerator)
                                       : static_cast<unsigned long long>(numerator);
  unsigned long long b = denominator < 0
                             ? 0ULL - static_cast<unsigned long long>(denominator)
                             : static_cast<unsigned long long>(denominator);
  int v = 0;
  while (a % prime == 0) {
    a /= prime;
    ++v;
  }
  while (b % prime == 0) {
    b /= prime;
    --v;
  }
  const int cap = policy.total();
  const auto da = expand_magnitude(a, prime, cap);
  const auto db = expand_magnitude(b, prime, cap);
  auto digits = unit_div(da, db, cap, prime);
  if (negative) complement_in_place(digits, prime);
  return PAdicNumber(prime, false, v, std::move(digits), v + cap);
}

PAdicNumber PAdicNumber::from_unit_digits(std::uint32_t prime, int valuation,
                                          std::vector<std::uint32_t> digits) {
  require_prime(prime);
  if (digits.empty()) throw InvalidArgument("unit digits must be nonempty");
  if (digits[0] == 0) throw InvalidArgument("leading unit digit must be nonzero");
  for (auto d : digits) {
    if (d >= prime) throw InvalidArgument("digit out of range");
  }
  const int a = valuation + static_cast<int>(digits.size());
  return PAdicNumber(prime, false, valuation, std::move(digits), a);
}

PAdicNumber PAdicNumber::from_absolute_digits(std::uint32_t prime,
                                              const std::vector<std::uint32_t>& digits) {
  require_prime(prime);
  for (auto d : digits) {
    if (d >= prime) throw InvalidArgument("digit out of range");
  }
  const int a = static_cast<int>(digits.size());
  std::size_t first = 0;
  while (first < digits.size() && digits[first] == 0) ++first;
  if (first == digits.size()) return zero_at_precision(prime, a);
  std::vector<std::uint32_t> unit(digits.begin() + static_cast<long>(first), digits.end());
  return PAdicNumber(prime, false, static_cast<int>(first), std::move(unit), a);
}

int PAdicNumber::valuation() const {
  if (digits_.empty()) {
    throw InvalidArgument("valuation undefined for a value indistinguishable from zero");
  }
  return valuation_;
}

int PAdicNumber::abs_precision() const {
  return exact_zero_ ? INT_MAX : abs_precision_;
}

std::uint32_t PAdicNumber::digit_at(int position) const {
  if (exact_zero_) return 0;
  if (position >= abs_precision_) throw InvalidArgument("digit position beyond precision");
  if (digits_.empty() || position < valuation_) return 0;
  return digits_[static_cast<std::size_t>(position - valuation_)];
}

NormValue PAdicNumber::norm() const {
  if (exact_zero_) return {Rational(0), false};
  if (digits_.empty()) return {prime_power(prime_, -abs_precision_), true};
  return {prime_power(prime_, -valuation_), false};
}

bool PAdicNumber::in_ring() const {
  if (exact_zero_) return true;
  if (digits_.empty()) return abs_precision_ >= 0;
  return valuation_ >= 0;
}

void PAdicNumber::check_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
  if (a.prime_ != b.prime_) throw InvalidArgument("mixed primes");
}

PAdicNumber PAdicNumber::operator-() const {
  if (digits_.empty()) return *this;
  std::vector<std::uint32_t> digits = digits_;
  complement_in_place(digits, prime_);
  return PAdicNumber(prime_, false, valuation_, std::move(digits), abs_precision_);
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
  PAdicNumber::check_same_prime(a, b);
  if (a.exact_zero_) return b;
  if (b.exact_zero_) return a;
  const std::uint32_t p = a.prime_;
  const int abs = std::min(a.abs_precision_, b.abs_precision_);
  if (a.digits_.empty() && b.digits_.empty()) {
    return PAdicNumber::zero_at_precision(p, abs);
  }
  if (a.digits_.empty()) return b.truncated_abs(abs);
  if (b.digits_.empty()) return a.truncated_abs(abs);
  const int lo = std::min(a.valuation_, b.valuation_);
  if (abs <= lo) return PAdicNumber::zero_at_precision(p, abs);
  const int len = abs - lo;
  std::vector<std::uint32_t> buf(static_cast<std::size_t>(len), 0);
  unsigned long long carry = 0;
  for (int pos = 0; pos < len; ++pos) {
    const int at = lo + pos;
    unsigned long long s = carry;
    if (at >= a.valuation_ && at - a.valuation_ < static_cast<int>(a.digits_.size())) {
      s += a.digits_[static_cast<std::size_t>(at - a.valuation_)];
    }
    if (at >= b.valuation_ && at - b.valuation_ < static_cast<int>(b.digits_.size())) {
      s += b.digits_[static_cast<std::size_t>(at - b.valuation_)];
    }
    buf[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(s % p);
    carry = s / p;
  }
  std::size_t first = 0;
  while (first < buf.size() && buf[first] == 0) ++first;
  if (first == buf.size()) return PAdicNumber::zero_at_precision(p, abs);
  std::vector<std::uint32_t> unit(buf.begin() + static_cast<long>(first), buf.end());
  return PAdicNumber(p, false, lo + static_cast<int>(first), std::move(unit), abs);
}

PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) {
  return a + (-b);
}

PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
  PAdicNumber::check_same_prime(a, b);
  if (a.exact_zero_ || b.exact_zero_) return PAdicNumber::zero(a.prime_);
  const std::uint32_t p = a.prime_;
  if (a.digits_.empty() && b.digits_.empty()) {
    return PAdicNumber::zero_at_precision(p, a.abs_precision_ + b.abs_precision_);
  }
  if (a.digits_.empty()) {
    return PAdicNumber::zero_at_precision(p, a.abs_precision_ + b.valuation_);
  }
  if (b.digits_.empty()) {
    return PAdicNumber::zero_at_precision(p, b.abs_precision_ + a.valuation_);
  }
  const int m = std::min(a.unit_digit_count(), b.unit_digit_count());
  const int v = a.valuation_ + b.valuation_;
  auto digits = unit_mul(a.digits_, b.digits_, m, p);
  return PAdicNumber(p, false, v, std::move(digits), v + m);
}

PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
  PAdicNumber::check_same_prime(a, b);
  if (b.exact_zero_) throw NumericError("division by zero");
  if (b.digits_.empty()) {
    throw NumericError("division by a value indistinguishable from zero at precision");
  }
  if (a.exact_zero_) return a;
  const std::uint32_t p = a.prime_;
  if (a.digits_.empty()) {
    return PAdicNumber::zero_at_precision(p, a.abs_precision_ - b.valuation_);
  }
  const int m = std::min(a.unit_digit_count(), b.unit_digit_count());
  const int v = a.valuation_ - b.valuation_;
  auto digits = unit_div(a.digits_, b.digits_, m, p);
  return PAdicNumber(p, false, v, std::move(digits), v + m);
}

PAdicNumber PAdicNumber::truncated_abs(int abs_precision) const {
  if (exact_zero_) return *this;
  if (abs_precision >= abs_precision_) return *this;
  if (digits_.empty() || valuation_ >= abs_precision) {
    return zero_at_precision(prime_, abs_precision);
  }
  std::vector<std::uint32_t> unit(digits_.begin(),
                                  digits_.begin() + (abs_precision - valuation_));
  return PAdicNumber(prime_, false, valuation_, std::move(unit), abs_precision);
}

PAdicNumber PAdicNumber::truncated_rel(int digit_count) const {
  if (digit_count < 1) throw InvalidArgument("digit_count must be >= 1");
  if (digits_.empty() || static_cast<int>(digits_.size()) <= digit_count) return *this;
  std::vector<std::uint32_t> unit(digits_.begin(), digits_.begin() + digit_count);
  return PAdicNumber(prime_, false, valuation_, std::move(unit),
                     valuation_ + digit_count);
}

bool PAdicNumber::same_value(const PAdicNumber& other) const {
  return (*this - other).is_zero_at_precision();
}

bool PAdicNumber::operator==(const PAdicNumber& other) const {
  if (prime_ != other.prime_ || exact_zero_ != other.exact_zero_) return false;
  if (exact_zero_) return true;
  if (digits_.empty() != other.digits_.empty()) return false;
  if (abs_precision_ != other.abs_precision_) return false;
  if (digits_.empty()) return true;
  return valuation_ == other.valuation_ && digits_ == other.digits_;
}

std::string PAdicNumber::to_string() const {
  if (digits_.empty()) return "0";
  std::size_t last = digits_.size();
  while (last > 1 && digits_[last - 1] == 0) --last;
  std::ostringstream out;
  out << "p^" << valuation_ << " * ";
  for (std::size_t i = 0; i < last; ++i) {
    if (i) out << '.';
    out << digits_[i];
  }
  return out.str();
}

PAdicNumber PAdicNumber::parse(std::string_view text, std::uint32_t prime,
                               const PrecisionPolicy& policy) {
  require_prime(prime);
  check_digit_budget(policy.total());
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  std::string_view s = trim(text);
  if (s == "0") return zero(prime);
  if (s.size() < 2 || s[0] != 'p' || s[1] != '^') {
    throw FormatError("bad p-adic number encoding: '" + std::string(text) + "'");
  }
  s.remove_prefix(2);
  std::size_t idx = 0;
  if (idx < s.size() && (s[idx] == '-' || s[idx] == '+')) ++idx;
  while (idx < s.size() && std::isdigit(static_cast<unsigned char>(s[idx]))) ++idx;
  int valuation = 0;
  try {
    valuation = std::stoi(std::string(s.substr(0, idx)));
  } catch (const std::exception&) {
    throw FormatError("bad valuation in p-adic number encoding");
  }
  std::string_view rest = trim(s.substr(idx));
  if (rest.empty() || rest.front() != '*') {
    throw FormatError("missing '*' in p-adic number encoding");
  }
  rest.remove_prefix(1);
  rest = trim(rest);
  if (rest.empty()) throw FormatError("missing digits in p-adic number encoding");
  std::vector<std::uint32_t> digits;
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t dot = rest.find('.', pos);
    const std::string_view tok =
        rest.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (tok.empty()) throw FormatError("empty digit in p-adic number encoding");
    unsigned long d = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw FormatError("bad digit '" + std::string(tok) + "' in p-adic number encoding");
      }
      d = d * 10 + static_cast<unsigned long>(c - '0');
      if (d >= prime) break;
    }
    if (d >= prime) {
      throw FormatError("digit out of range [0, " + std::to_string(prime - 1) + "]");
    }
    digits.push_back(static_cast<std::uint32_t>(d));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
    if (pos == rest.size()) throw FormatError("trailing '.' in p-adic number encoding");
  }
  std::size_t first = 0;
  while (first < digits.size() && digits[first] == 0) ++first;
  if (first == digits.size()) return zero(prime);
  valuation += static_cast<int>(first);
  digits.erase(digits.begin(), digits.begin() + static_cast<long>(first));
  const int cap = policy.total();
  if (static_cast<int>(digits.size()) < cap) {
    digits.resize(static_cast<std::size_t>(cap), 0);
  }
  return PAdicNumber(prime, false, valuation, std::move(digits),
                     valuation + static_cast<int>(digits.size()));
}

}  // namespace padic
