#include "padic/dataset.hpp"

#include "padic/mahler.hpp"
#include "padic/rng.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace padic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

long long parse_ll(std::string_view tok, const char* what, std::size_t line = 0) {
  try {
    std::size_t used = 0;
    const std::string str(tok);
    const long long v = std::stoll(str, &used);
    if (used != str.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw FormatError(std::string("bad ") + what + ": '" + std::string(tok) + "'", line);
  }
}

}  // namespace

Dataset::Dataset(std::uint32_t prime, int dimension, int working_digits)
    : prime_(prime), dimension_(dimension), working_digits_(working_digits) {
  require_prime(prime);
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  if (working_digits < 1) throw InvalidArgument("working digits must be >= 1");
}

PAdicNumber Dataset::normalize(const PAdicNumber& v) const {
  if (!v.in_ring()) throw InvalidArgument("dataset values must lie in Z_p");
  if (!v.is_exact_zero() && v.abs_precision() < working_digits_) {
    throw InvalidArgument("value known to fewer digits than the dataset precision");
  }
  PAdicNumber t = v.truncated_abs(working_digits_);
  if (!t.is_regular()) {
    return PAdicNumber::zero_at_precision(prime_, working_digits_);
  }
  return t;
}

void Dataset::add(const PointND& x, const PAdicNumber& y, Split split) {
  if (x.prime != prime_ || y.prime() != prime_) throw InvalidArgument("mixed primes");
  if (x.dimension() != dimension_) throw InvalidArgument("dimension mismatch");
  std::vector<PAdicNumber> coords;
  coords.reserve(x.coordinates.size());
  for (const auto& c : x.coordinates) coords.push_back(normalize(c));
  records_.push_back(DataRecord{PointND(prime_, std::move(coords)), normalize(y), split});
}

void Dataset::set_label(std::size_t i, const PAdicNumber& y) {
  if (y.prime() != prime_) throw InvalidArgument("mixed primes");
  records_.at(i).y = normalize(y);
}

std::size_t Dataset::count(Partition partition) const {
  if (partition == Partition::All) return records_.size();
  const Split want = partition == Partition::Train ? Split::Train : Split::Validation;
  std::size_t n = 0;
  for (const auto& r : records_) {
    if (r.split == want) ++n;
  }
  return n;
}

std::vector<std::size_t> Dataset::indices(Partition partition) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (partition == Partition::All ||
        (partition == Partition::Train) == (records_[i].split == Split::Train)) {
      out.push_back(i);
    }
  }
  return out;
}

bool Dataset::operator==(const Dataset& other) const {
  if (prime_ != other.prime_ || dimension_ != other.dimension_ ||
      working_digits_ != other.working_digits_ || comments_ != other.comments_ ||
      records_.size() != other.records_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& a = records_[i];
    const auto& b = other.records_[i];
    if (a.split != b.split || a.y != b.y) return false;
    for (int c = 0; c < dimension_; ++c) {
      if (a.x.coordinates[static_cast<std::size_t>(c)] !=
          b.x.coordinates[static_cast<std::size_t>(c)]) {
        return false;
      }
    }
  }
  return true;
}

Dataset parse_dataset(std::string_view text) {
  std::vector<std::string_view> lines = split_on(text, '\n');
  std::size_t lineno = 0;
  // Header.
  std::string_view header;
  while (lineno < lines.size()) {
    header = lines[lineno];
    if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
    ++lineno;
    if (!trim(header).empty()) break;
    header = {};
  }
  header = trim(header);
  std::istringstream hs{std::string(header)};
  std::string magic, version, kp, kn, km;
  hs >> magic >> version >> kp >> kn >> km;
  if (magic != "padic-regress-data" || version != "v1" || kp.rfind("p=", 0) != 0 ||
      kn.rfind("n=", 0) != 0 || km.rfind("M=", 0) != 0) {
    throw FormatError("bad dataset header: expected 'padic-regress-data v1 p=<p> n=<n> M=<M>'",
                      lineno);
  }
  const long long p = parse_ll(kp.substr(2), "prime", lineno);
  const long long n = parse_ll(kn.substr(2), "dimension", lineno);
  const long long m = parse_ll(km.substr(2), "precision", lineno);
  if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
    throw FormatError(std::to_string(p) + " is not prime", lineno);
  }
  if (n < 1 || m < 1) throw FormatError("bad dataset header values", lineno);
  Dataset data(static_cast<std::uint32_t>(p), static_cast<int>(n), static_cast<int>(m));
  const PrecisionPolicy policy(static_cast<int>(m), 0);

  for (; lineno < lines.size(); ++lineno) {
    std::string_view line = lines[lineno];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      data.add_comment(std::string(trim(body.substr(1))));
      continue;
    }
    const auto fields = split_on(body, ';');
    if (static_cast<long long>(fields.size()) != n + 2) {
      throw FormatError("expected " + std::to_string(n + 2) + " ';'-separated fields, got " +
                            std::to_string(fields.size()),
                        lineno + 1);
    }
    std::vector<PAdicNumber> coords;
    coords.reserve(static_cast<std::size_t>(n));
    PAdicNumber y = PAdicNumber::zero(static_cast<std::uint32_t>(p));
    for (long long f = 0; f <= n; ++f) {
      PAdicNumber v = PAdicNumber::zero(static_cast<std::uint32_t>(p));
      try {
        v = PAdicNumber::parse(fields[static_cast<std::size_t>(f)],
                               static_cast<std::uint32_t>(p), policy);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), lineno + 1);
      }
      if (v.is_regular() && v.valuation() < 0) {
        throw FormatError("negative valuation: dataset values must lie in Z_p", lineno + 1);
      }
      if (f < n) {
        coords.push_back(std::move(v));
      } else {
        y = std::move(v);
      }
    }
    const std::string_view tag = trim(fields.back());
    Split sp;
    if (tag == "train") {
      sp = Split::Train;
    } else if (tag == "val") {
      sp = Split::Validation;
    } else {
      throw FormatError("bad split tag '" + std::string(tag) + "' (expected train|val)",
                        lineno + 1);
    }
    data.add(PointND(static_cast<std::uint32_t>(p), std::move(coords)), y, sp);
  }
  return data;
}

std::string write_dataset(const Dataset& data) {
  std::ostringstream out;
  out << "padic-regress-data v1 p=" << data.prime() << " n=" << data.dimension()
      << " M=" << data.working_digits() << "\n";
  for (const auto& c : data.comments()) out << "# " << c << "\n";
  for (const auto& r : data.records()) {
    for (const auto& c : r.x.coordinates) out << c.to_string() << " ; ";
    out << r.y.to_string() << " ; "
        << (r.split == Split::Train ? "train" : "val") << "\n";
  }
  return out.str();
}

Dataset split(const Dataset& data, const Rational& train_fraction, std::uint64_t seed) {
  if (train_fraction <= 0 || train_fraction > 1) {
    throw InvalidArgument("train fraction must be in (0, 1]");
  }
  Dataset out = data;
  const std::size_t n = out.size();
  if (n == 0) return out;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = rng.bounded(i + 1);
    std::swap(order[i], order[j]);
  }
  const BigInt train_count_big =
      numerator(train_fraction) * BigInt(n) / denominator(train_fraction);
  const std::size_t train_count = static_cast<std::size_t>(train_count_big);
  for (std::size_t i = 0; i < n; ++i) {
    out.set_split(order[i], i < train_count ? Split::Train : Split::Validation);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TargetSpec

void TargetSpec::validate(std::uint32_t prime, int dimension) const {
  switch (family) {
    case Family::MahlerWeights:
      if (mahler_weights.empty()) throw InvalidArgument("mahler target needs weights");
      break;
    case Family::CoordinatePolynomial:
      if (polynomial.empty()) throw InvalidArgument("poly target needs terms");
      for (const auto& t : polynomial) {
        for (const auto& [var, exp] : t.powers) {
          if (var < 1 || var > dimension) {
            throw InvalidArgument("poly target references x" + std::to_string(var) +
                                  " outside dimension " + std::to_string(dimension));
          }
          if (exp < 1) throw InvalidArgument("poly exponent must be >= 1");
        }
      }
      break;
    case Family::DigitMap:
      if (digit_table.size() != prime) {
        throw InvalidArgument("digitmap table must list exactly p entries");
      }
      for (auto d : digit_table) {
        if (d >= prime) throw InvalidArgument("digitmap entry out of range");
      }
      break;
  }
  if (noise_enabled) {
    if (noise_exponent < 1) throw InvalidArgument("noise exponent must be >= 1");
    if (noise_probability < 0.0 || noise_probability > 1.0) {
      throw InvalidArgument("noise probability must be in [0, 1]");
    }
  }
}

TargetSpec TargetSpec::parse(std::string_view text, std::uint32_t prime) {
  TargetSpec spec;
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw FormatError("target spec must be '<family>:<params>'");
  }
  const std::string_view family = trim(text.substr(0, colon));
  const std::string_view params = trim(text.substr(colon + 1));
  if (family == "mahler") {
    spec.family = Family::MahlerWeights;
    for (auto tok : split_on(params, ',')) {
      spec.mahler_weights.push_back(parse_ll(trim(tok), "mahler weight"));
    }
  } else if (family == "poly") {
    spec.family = Family::CoordinatePolynomial;
    // sign-separated terms: <int>[*x<i>[^<e>]]*  or  x<i>[^<e>][*...]
    std::size_t pos = 0;
    long long sign = 1;
    if (!params.empty() && (params[0] == '+' || params[0] == '-')) {
      sign = params[0] == '-' ? -1 : 1;
      pos = 1;
    }
    while (pos < params.size()) {
      std::size_t end = pos;
      while (end < params.size() && params[end] != '+' && params[end] != '-') ++end;
      const std::string_view term_text = trim(params.substr(pos, end - pos));
      if (term_text.empty()) throw FormatError("empty term in poly target");
      PolyTerm term;
      term.coefficient = sign;
      bool saw_coefficient = false;
      for (auto factor : split_on(term_text, '*')) {
        factor = trim(factor);
        if (factor.empty()) throw FormatError("empty factor in poly target");
        if (factor[0] == 'x') {
          const std::size_t caret = factor.find('^');
          const long long var = parse_ll(factor.substr(1, caret == std::string_view::npos
                                                              ? std::string_view::npos
                                                              : caret - 1),
                                         "poly variable index");
          long long exp = 1;
          if (caret != std::string_view::npos) {
            exp = parse_ll(factor.substr(caret + 1), "poly exponent");
          }
          term.powers.emplace_back(static_cast<int>(var), static_cast<int>(exp));
        } else {
          if (saw_coefficient) throw FormatError("multiple coefficients in poly term");
          saw_coefficient = true;
          term.coefficient *= parse_ll(factor, "poly coefficient");
        }
      }
      spec.polynomial.push_back(std::move(term));
      if (end == params.size()) break;
      sign = params[end] == '-' ? -1 : 1;
      pos = end + 1;
    }
    if (spec.polynomial.empty()) throw FormatError("poly target needs at least one term");
  } else if (family == "digitmap") {
    spec.family = Family::DigitMap;
    for (auto tok : split_on(params, ',')) {
      const long long d = parse_ll(trim(tok), "digitmap entry");
      if (d < 0 || d >= static_cast<long long>(prime)) {
        throw FormatError("digitmap entry out of range [0, " + std::to_string(prime - 1) + "]");
      }
      spec.digit_table.push_back(static_cast<std::uint32_t>(d));
    }
  } else {
    throw FormatError("unknown target family '" + std::string(family) +
                      "' (expected mahler|poly|digitmap)");
  }
  return spec;
}

std::string TargetSpec::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::MahlerWeights: {
      out << "mahler:";
      for (std::size_t i = 0; i < mahler_weights.size(); ++i) {
        if (i) out << ',';
        out << mahler_weights[i];
      }
      break;
    }
    case Family::CoordinatePolynomial: {
      out << "poly:";
      bool first = true;
      for (const auto& t : polynomial) {
        long long c = t.coefficient;
        if (!first) {
          out << (c < 0 ? '-' : '+');
          if (c < 0) c = -c;
        }
        first = false;
        out << c;
        for (const auto& [var, exp] : t.powers) {
          out << "*x" << var;
          if (exp != 1) out << '^' << exp;
        }
      }
      break;
    }
    case Family::DigitMap: {
      out << "digitmap:";
      for (std::size_t i = 0; i < digit_table.size(); ++i) {
        if (i) out << ',';
        out << digit_table[i];
      }
      break;
    }
  }
  if (noise_enabled) {
    out << " noise:e=" << noise_exponent << ",q=" << noise_probability;
  }
  return out.str();
}

PAdicNumber TargetSpec::evaluate(const PointND& x, const PrecisionPolicy& policy) const {
  const std::uint32_t p = x.prime;
  switch (family) {
    case Family::MahlerWeights: {
      std::vector<PAdicNumber> weights;
      weights.reserve(mahler_weights.size());
      for (long long w : mahler_weights) {
        weights.push_back(PAdicNumber::from_integer(w, p, policy));
      }
      const MahlerSeries series{p, std::move(weights)};
      return eval_series(series, interleave(x), policy);
    }
    case Family::CoordinatePolynomial: {
      PAdicNumber acc = PAdicNumber::zero(p);
      for (const auto& term : polynomial) {
        PAdicNumber t = PAdicNumber::from_integer(term.coefficient, p, policy);
        for (const auto& [var, exp] : term.powers) {
          const auto& xi = x.coordinates[static_cast<std::size_t>(var - 1)];
          for (int e = 0; e < exp; ++e) t = t * xi;
        }
        acc = acc + t;
      }
      return acc;
    }
    case Family::DigitMap: {
      const PAdicNumber z = interleave(x);
      if (z.is_exact_zero()) {
        // All digits are zero; substitute the image of 0 everywhere.
        const int m = policy.working_digits;
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(m), digit_table[0]);
        return PAdicNumber::from_absolute_digits(p, digits);
      }
      const int a = z.abs_precision();
      std::vector<std::uint32_t> digits(static_cast<std::size_t>(a), 0);
      for (int j = 0; j < a; ++j) {
        digits[static_cast<std::size_t>(j)] = digit_table[z.digit_at(j)];
      }
      return PAdicNumber::from_absolute_digits(p, digits);
    }
  }
  throw InvalidArgument("unreachable target family");
}

Dataset generate(const TargetSpec& spec, int dimension, int count, std::uint32_t prime,
                 int working_digits, std::uint64_t seed) {
  spec.validate(prime, dimension);
  if (count < 0) throw InvalidArgument("record count must be >= 0");
  Dataset data(prime, dimension, working_digits);
  data.add_comment("target = " + spec.to_string());
  data.add_comment("seed = " + std::to_string(seed));

  // Guard budget for the mahler family covers the divisions inside omega.
  int guard = 0;
  if (spec.family == TargetSpec::Family::MahlerWeights) {
    guard = factorial_valuation(prime,
                                static_cast<int>(spec.mahler_weights.size()) - 1) + 2;
  }
  const PrecisionPolicy policy(working_digits, guard);

  Rng rng(seed);
  // The planted point is the exact finite expansion of the drawn digits:
  // the zero tail keeps label evaluation above the dataset precision even
  // after the divisions inside omega.
  const int eval_digits = working_digits + policy.guard_digits;
  for (int a = 0; a < count; ++a) {
    std::vector<PAdicNumber> coords;
    coords.reserve(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) {
      std::vector<std::uint32_t> digits(static_cast<std::size_t>(eval_digits), 0);
      for (int j = 0; j < working_digits; ++j) {
        digits[static_cast<std::size_t>(j)] = rng.digit(prime);
      }
      coords.push_back(PAdicNumber::from_absolute_digits(prime, digits));
    }
    PointND x(prime, std::move(coords));
    PAdicNumber y = spec.evaluate(x, policy);
    if (spec.noise_enabled && rng.unit_real() < spec.noise_probability) {
      const int unit_len = std::max(1, working_digits - spec.noise_exponent);
      std::vector<std::uint32_t> unit(static_cast<std::size_t>(unit_len), 0);
      unit[0] = 1 + rng.digit(prime - 1);
      for (std::size_t j = 1; j < unit.size(); ++j) unit[j] = rng.digit(prime);
      y = y + PAdicNumber::from_unit_digits(prime, spec.noise_exponent, std::move(unit));
    }
    data.add(x, y, Split::Train);
  }
  return data;
}

}  // namespace padic
