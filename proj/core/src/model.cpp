#include "padic/model.hpp"

#include <cctype>
#include <sstream>

namespace padic {

RegressionModel::RegressionModel(std::uint32_t prime, int dimension, MahlerSeries weights,
                                 const PrecisionPolicy& policy)
    : prime_(prime), dimension_(dimension), weights_(std::move(weights)), policy_(policy) {
  require_prime(prime);
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  if (weights_.weights.empty()) throw InvalidArgument("model needs at least one weight");
  if (weights_.prime != prime) throw InvalidArgument("mixed primes");
  for (const auto& w : weights_.weights) {
    if (w.prime() != prime) throw InvalidArgument("mixed primes");
  }
}

PAdicNumber RegressionModel::predict(const PointND& x) const {
  if (x.prime != prime_) throw InvalidArgument("mixed primes");
  if (x.dimension() != dimension_) throw InvalidArgument("dimension mismatch");
  return eval_series(weights_, interleave(x), policy_);
}

PAdicNumber RegressionModel::residual(const PointND& x, const PAdicNumber& y) const {
  if (y.prime() != prime_) throw InvalidArgument("mixed primes");
  return y - predict(x);
}

LossValue loss(const RegressionModel& model, const Dataset& data, Partition partition) {
  if (data.prime() != model.prime()) throw InvalidArgument("mixed primes");
  if (data.dimension() != model.dimension()) throw InvalidArgument("dimension mismatch");
  const auto idx = data.indices(partition);
  if (idx.empty()) throw InvalidArgument("empty partition");
  LossValue out;
  for (const auto i : idx) {
    const auto& rec = data.record(i);
    const NormValue nv = model.residual(rec.x, rec.y).norm();
    if (nv.is_bound) {
      out.bound_excess += nv.value;
      out.bound_flag = true;
    } else {
      out.value += nv.value;
    }
  }
  const Rational n(idx.size());
  out.value /= n;
  out.bound_excess /= n;
  return out;
}

std::string write_model(const RegressionModel& model) {
  std::ostringstream out;
  out << "padic-regress-model v1\n";
  out << "p = " << model.prime() << "\n";
  out << "n = " << model.dimension() << "\n";
  out << "K = " << model.degree() << "\n";
  out << "M = " << model.policy().working_digits << "\n";
  const int m = model.policy().working_digits;
  for (int k = 0; k <= model.degree(); ++k) {
    out << "w[" << k << "] = "
        << model.weights().weights[static_cast<std::size_t>(k)].truncated_rel(m).to_string()
        << "\n";
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long field_value(std::string_view line, const std::string& key, std::size_t lineno) {
  const std::string prefix = key + " =";
  if (line.rfind(prefix, 0) != 0) {
    throw FormatError("expected '" + key + " = <value>'", lineno);
  }
  try {
    return std::stoll(std::string(trim(line.substr(prefix.size()))));
  } catch (const std::exception&) {
    throw FormatError("bad value for '" + key + "'", lineno);
  }
}

}  // namespace

RegressionModel parse_model(std::string_view text, int guard_digits) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty()) continue;
      lines.emplace_back(trim(line));
    }
  }
  if (lines.empty() || lines[0] != "padic-regress-model v1") {
    throw FormatError("bad model header: expected 'padic-regress-model v1'", 1);
  }
  if (lines.size() < 5) throw FormatError("truncated model file");
  const long long p = field_value(lines[1], "p", 2);
  const long long n = field_value(lines[2], "n", 3);
  const long long k = field_value(lines[3], "K", 4);
  const long long m = field_value(lines[4], "M", 5);
  if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
    throw FormatError(std::to_string(p) + " is not prime", 2);
  }
  if (n < 1 || k < 0 || m < 1) throw FormatError("bad model header values");
  if (static_cast<long long>(lines.size()) != 5 + k + 1) {
    throw FormatError("expected " + std::to_string(k + 1) + " weight lines");
  }
  const PrecisionPolicy policy(static_cast<int>(m), guard_digits);
  std::vector<PAdicNumber> weights;
  weights.reserve(static_cast<std::size_t>(k) + 1);
  for (long long i = 0; i <= k; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(5 + i)];
    const std::string prefix = "w[" + std::to_string(i) + "] =";
    if (line.rfind(prefix, 0) != 0) {
      throw FormatError("expected '" + prefix + " <value>'", static_cast<std::size_t>(6 + i));
    }
    try {
      weights.push_back(PAdicNumber::parse(trim(std::string_view(line).substr(prefix.size())),
                                           static_cast<std::uint32_t>(p), policy));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), static_cast<std::size_t>(6 + i));
    }
  }
  return RegressionModel(static_cast<std::uint32_t>(p), static_cast<int>(n),
                         MahlerSeries{static_cast<std::uint32_t>(p), std::move(weights)},
                         policy);
}

}  // namespace padic
