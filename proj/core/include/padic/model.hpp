#ifndef PADIC_MODEL_HPP
#define PADIC_MODEL_HPP

#include "padic/dataset.hpp"
#include "padic/mahler.hpp"

#include <string>
#include <string_view>

namespace padic {

/// Mean of p-adic residual norms, kept as exact rationals. `value` is the
/// sum of the certain norms; residuals indistinguishable from zero at
/// precision contribute only to `bound_excess` (the sum of their upper
/// bounds) and set `bound_flag`. The true loss lies in
/// [value, value + bound_excess].
struct LossValue {
  Rational value = 0;
  Rational bound_excess = 0;
  bool bound_flag = false;

  Rational upper() const { return value + bound_excess; }
};

/// f(x, w) = sum_{k=0..K} w_k C(interleave(x), k). Weights may live in Q_p
/// (the exact solver can produce them); integrality is a checked property,
/// not a type restriction.
class RegressionModel {
public:
  RegressionModel(std::uint32_t prime, int dimension, MahlerSeries weights,
                  const PrecisionPolicy& policy);

  std::uint32_t prime() const { return prime_; }
  int dimension() const { return dimension_; }
  int degree() const { return weights_.degree(); }
  const MahlerSeries& weights() const { return weights_; }
  const PrecisionPolicy& policy() const { return policy_; }
  bool is_integral() const { return weights_.is_integral(); }

  PAdicNumber predict(const PointND& x) const;
  PAdicNumber residual(const PointND& x, const PAdicNumber& y) const;

private:
  std::uint32_t prime_;
  int dimension_;
  MahlerSeries weights_;
  PrecisionPolicy policy_;
};

/// (1/N) sum_a |y_a - f(x_a, w)|_p over the chosen partition.
/// Throws InvalidArgument when the partition is empty.
LossValue loss(const RegressionModel& model, const Dataset& data, Partition partition);

/// Model file format v1:
///   padic-regress-model v1
///   p = <p> / n = <n> / K = <K> / M = <M>
///   w[k] = <padic encoding>, one line per weight.
std::string write_model(const RegressionModel& model);
RegressionModel parse_model(std::string_view text, int guard_digits = 8);

}  // namespace padic

#endif
