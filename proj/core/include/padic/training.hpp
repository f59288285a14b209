#ifndef PADIC_TRAINING_HPP
#define PADIC_TRAINING_HPP

#include "padic/dataset.hpp"
#include "padic/matrix.hpp"
#include "padic/model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace padic {

inline constexpr int kDefaultGuardDigits = 8;

/// Configuration of the stochastic trainer. beta follows the geometric
/// schedule beta_i = beta0 * beta_growth^i; proposal ball radii p^{-r} are
/// drawn with the geometric law P(r = j) = (1-q) q^j.
struct TrainerConfig {
  int degree = 1;                // K
  long long steps = 1000;
  double beta0 = 1.0;            // 0 degenerates to blind uniform search
  double beta_growth = 1.001;
  double radius_decay = 0.5;     // q
  std::uint64_t seed = 0;
  int truncation_digits = 3;     // lattice precision of the exact oracle
  int chains = 1;
  bool warm_start = false;       // initialize from a size-(K+1) exact sub-fit

  void validate() const;
};

/// Everything a fit run reports. `trajectory` holds the best-so-far loss
/// after every step (length steps + 1, non-increasing by construction);
/// `milestones` the steps at which it improved.
struct FitReport {
  explicit FitReport(RegressionModel m) : model(std::move(m)) {}

  std::string mode;  // "exact" | "stochastic"
  RegressionModel model;
  TrainerConfig config;
  int n_train = 0;
  int n_val = 0;

  std::vector<LossValue> trajectory;
  std::vector<std::pair<long long, LossValue>> milestones;
  LossValue train_loss;
  bool weights_integral = false;

  // Exact-fit extras.
  bool is_exact = false;
  Rational design_det_norm = 0;  // |A|_p
  bool certificate = false;      // residual bound at the integral truncation
  std::vector<NormValue> residual_norms;

  // Stochastic extras.
  long long accepted = 0;
  int winning_chain = 0;

  std::string to_text() const;
  /// CSV columns (step, loss numerator, loss denominator) of the
  /// best-so-far objective at each milestone.
  std::string trajectory_csv() const;
};

/// Design matrix A_ak = C(interleave(x^(a)), k), rows over the chosen
/// partition, columns k = 0..K.
PAdicMatrix build_design_matrix(const Dataset& data, int degree,
                                Partition partition = Partition::Train,
                                int guard_digits = kDefaultGuardDigits);

/// Exact interpolation at K = N_train - 1: solves l_a(w) = 0 and reports
/// |A|_p, per-record residual norms, the integrality verdict, and the
/// certificate evaluated at the integral truncation of the solution.
/// Throws NumericError for duplicate interleaved inputs or a matrix
/// singular at precision.
FitReport fit_exact(const Dataset& data, int guard_digits = kDefaultGuardDigits);

/// max_a |l_a(w0)|_p <= |A|_p^2 over the train partition. When true, the
/// exact solution is guaranteed to lie in Z_p^N. w0 must lie in Z_p^{K+1}.
bool check_integrality(const std::vector<PAdicNumber>& w0, const Dataset& data,
                       const Rational& a_norm, int guard_digits = kDefaultGuardDigits);

/// Metropolis walk targeting the Gibbs law: a proposal is drawn from a
/// ball p^{-r} Z_p^{K+1} (r geometric) with uniform digits and accepted
/// with probability min(1, exp(-beta_i * (L(w+xi) - L(w)))). Equal loss
/// accepts. Deterministic given (seed, config, dataset); with several
/// chains the best final loss wins, ties broken by chain index.
FitReport fit_stochastic(const Dataset& data, const TrainerConfig& cfg,
                         int guard_digits = kDefaultGuardDigits);

/// One exactly enumerated step of the Gibbs law on the truncated lattice.
struct GibbsOracleResult {
  Rational loss_at_w;        // L(w), upper value
  double expected_loss;      // E[L(w + xi)] under the Gibbs weights
  double log_normalizer;     // log N(w, beta)
  double dlogn_dbeta;        // N^{-1} dN/dbeta by direct enumeration
  Rational improving_measure;  // Haar measure of { xi : L(w+xi) < L(w) }
  std::uint64_t lattice_points;
};

/// Enumerates all xi on the lattice (Z / p^t)^{K+1} with uniform weights
/// (Haar measure restricted to the truncation) and computes the exact
/// Gibbs expectation of the loss. Throws when the lattice exceeds 2^20
/// points.
GibbsOracleResult gibbs_oracle_step_expectation(const std::vector<PAdicNumber>& w,
                                                double beta, const Dataset& data,
                                                int truncation_digits,
                                                int guard_digits = kDefaultGuardDigits);

}  // namespace padic

#endif
