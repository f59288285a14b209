#ifndef PADIC_DATASET_HPP
#define PADIC_DATASET_HPP

#include "padic/embedding.hpp"
#include "padic/number.hpp"
#include "padic/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace padic {

enum class Split { Train, Validation };
enum class Partition { Train, Validation, All };

struct DataRecord {
  PointND x;
  PAdicNumber y;
  Split split;
};

/// Records (x in Z_p^n, y in Z_p) at a shared absolute precision M: every
/// stored value is known modulo p^M and nothing more, including zeros
/// (which are kept as zero-at-precision-M, never exact). That uniform
/// precision is what makes perfect-fit residuals come out as at-precision
/// bounds instead of spurious exact values.
class Dataset {
public:
  Dataset(std::uint32_t prime, int dimension, int working_digits);

  std::uint32_t prime() const { return prime_; }
  int dimension() const { return dimension_; }
  int working_digits() const { return working_digits_; }

  /// Validates primes/dimension/Z_p membership and normalizes the values
  /// to absolute precision M.
  void add(const PointND& x, const PAdicNumber& y, Split split = Split::Train);

  std::size_t size() const { return records_.size(); }
  std::size_t count(Partition partition) const;
  const DataRecord& record(std::size_t i) const { return records_.at(i); }
  const std::vector<DataRecord>& records() const { return records_; }
  std::vector<std::size_t> indices(Partition partition) const;

  void set_split(std::size_t i, Split split) { records_.at(i).split = split; }
  /// Replaces a label (normalized to precision M like add()).
  void set_label(std::size_t i, const PAdicNumber& y);

  const std::vector<std::string>& comments() const { return comments_; }
  void add_comment(std::string text) { comments_.push_back(std::move(text)); }

  bool operator==(const Dataset& other) const;

private:
  PAdicNumber normalize(const PAdicNumber& v) const;

  std::uint32_t prime_;
  int dimension_;
  int working_digits_;
  std::vector<std::string> comments_;
  std::vector<DataRecord> records_;
};

/// Dataset file format v1:
///   padic-regress-data v1 p=<p> n=<n> M=<M>
///   # optional comments
///   <x1> ; ... ; <xn> ; <y> ; <train|val>
Dataset parse_dataset(std::string_view text);
std::string write_dataset(const Dataset& data);

/// Deterministic seeded shuffle, then floor(fraction * N) records become
/// train and the rest validation.
Dataset split(const Dataset& data, const Rational& train_fraction,
              std::uint64_t seed);

/// Synthetic target families for planted datasets.
struct TargetSpec {
  enum class Family { MahlerWeights, CoordinatePolynomial, DigitMap };

  struct PolyTerm {
    long long coefficient = 0;
    // (1-based variable index, exponent) factors; empty means a constant.
    std::vector<std::pair<int, int>> powers;
  };

  Family family = Family::MahlerWeights;
  std::vector<long long> mahler_weights;
  std::vector<PolyTerm> polynomial;
  std::vector<std::uint32_t> digit_table;

  // Optional label perturbation u * p^e with probability q (u a random unit).
  bool noise_enabled = false;
  int noise_exponent = 1;
  double noise_probability = 0.0;

  /// "mahler:0,1,-2" | "poly:3+2*x1^2+5*x1*x2" | "digitmap:2,0,1"
  static TargetSpec parse(std::string_view text, std::uint32_t prime);
  std::string to_string() const;

  /// Evaluates the target at one point (noise not applied here).
  PAdicNumber evaluate(const PointND& x, const PrecisionPolicy& policy) const;

  void validate(std::uint32_t prime, int dimension) const;
};

/// Draws N points with uniform digits (Haar measure on the truncation
/// lattice), labels them with the target, applies optional noise, and
/// records the generating spec in a dataset comment. All records start in
/// the train split.
Dataset generate(const TargetSpec& spec, int dimension, int count,
                 std::uint32_t prime, int working_digits, std::uint64_t seed);

}  // namespace padic

#endif
