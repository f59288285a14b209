#include "padic/training.hpp"

#include "padic/rng.hpp"

#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

namespace padic {

void TrainerConfig::validate() const {
  if (degree < 0) throw InvalidArgument("degree must be >= 0");
  if (steps < 0) throw InvalidArgument("steps must be >= 0");
  if (beta0 < 0.0) throw InvalidArgument("beta0 must be >= 0");
  if (beta_growth < 1.0) throw InvalidArgument("beta growth factor must be >= 1");
  if (!(radius_decay > 0.0 && radius_decay < 1.0)) {
    throw InvalidArgument("radius decay must lie strictly inside (0, 1)");
  }
  if (truncation_digits < 1) throw InvalidArgument("truncation digits must be >= 1");
  if (chains < 1) throw InvalidArgument("chains must be >= 1");
}

namespace {

struct DesignRows {
  std::vector<std::vector<PAdicNumber>> rows;  // rows[a][k] = omega_k(zeta_a)
  std::vector<PAdicNumber> labels;
  std::vector<PAdicNumber> zetas;
};

DesignRows design_rows(const Dataset& data, int degree, Partition partition,
                       const PrecisionPolicy& policy) {
  DesignRows out;
  for (const auto i : data.indices(partition)) {
    const auto& rec = data.record(i);
    PAdicNumber zeta = interleave(rec.x);
    out.rows.push_back(omega_row(degree, zeta, policy));
    out.labels.push_back(rec.y);
    out.zetas.push_back(std::move(zeta));
  }
  return out;
}

PAdicNumber row_residual(const std::vector<PAdicNumber>& weights,
                         const std::vector<PAdicNumber>& row, const PAdicNumber& label) {
  PAdicNumber acc = label;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc = acc - weights[k] * row[k];
  }
  return acc;
}

LossValue loss_from_rows(const std::vector<PAdicNumber>& weights, const DesignRows& d) {
  LossValue out;
  for (std::size_t a = 0; a < d.rows.size(); ++a) {
    const NormValue nv = row_residual(weights, d.rows[a], d.labels[a]).norm();
    if (nv.is_bound) {
      out.bound_excess += nv.value;
      out.bound_flag = true;
    } else {
      out.value += nv.value;
    }
  }
  const Rational n(d.rows.size());
  out.value /= n;
  out.bound_excess /= n;
  return out;
}

// Digits of w at nonnegative p-exponents: a definite element of Z_p to use
// as a certificate candidate.
PAdicNumber integral_part(const PAdicNumber& w, std::uint32_t p) {
  if (!w.is_regular()) return PAdicNumber::zero(p);
  if (w.valuation() >= 0) return w;
  const int a = w.abs_precision();
  if (a <= 0) return PAdicNumber::zero(p);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(a), 0);
  for (int j = 0; j < a; ++j) digits[static_cast<std::size_t>(j)] = w.digit_at(j);
  return PAdicNumber::from_absolute_digits(p, digits);
}

Rational max_residual_norm(const std::vector<PAdicNumber>& weights, const DesignRows& d) {
  Rational best = 0;
  for (std::size_t a = 0; a < d.rows.size(); ++a) {
    const NormValue nv = row_residual(weights, d.rows[a], d.labels[a]).norm();
    if (nv.value > best) best = nv.value;
  }
  return best;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string double_str(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void print_loss(std::ostringstream& out, const std::string& key, const LossValue& l) {
  out << key << " = " << rational_to_string(l.value) << "\n";
  out << key << ".is_bound = " << bool_str(l.bound_flag) << "\n";
  out << key << ".upper = " << rational_to_string(l.upper()) << "\n";
}

}  // namespace

PAdicMatrix build_design_matrix(const Dataset& data, int degree, Partition partition,
                                int guard_digits) {
  const PrecisionPolicy policy(data.working_digits(), guard_digits);
  const auto d = design_rows(data, degree, partition, policy);
  if (d.rows.empty()) throw InvalidArgument("empty partition");
  PAdicMatrix a(data.prime(), static_cast<int>(d.rows.size()), degree + 1);
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    for (int k = 0; k <= degree; ++k) {
      a.set(static_cast<int>(r), k, d.rows[r][static_cast<std::size_t>(k)]);
    }
  }
  return a;
}

FitReport fit_exact(const Dataset& data, int guard_digits) {
  const std::size_t n_train = data.count(Partition::Train);
  if (n_train == 0) throw InvalidArgument("empty train partition");
  const int degree = static_cast<int>(n_train) - 1;
  const PrecisionPolicy policy(data.working_digits(), guard_digits);
  const auto d = design_rows(data, degree, Partition::Train, policy);

  // Distinct interpolation nodes are required for a nonsingular system.
  for (std::size_t a = 0; a < d.zetas.size(); ++a) {
    for (std::size_t b = a + 1; b < d.zetas.size(); ++b) {
      if (d.zetas[a].same_value(d.zetas[b])) {
        if (d.labels[a].same_value(d.labels[b])) {
          throw NumericError("duplicate interleaved inputs at records " +
                             std::to_string(a) + " and " + std::to_string(b));
        }
        throw NumericError("duplicate interleaved inputs with conflicting labels at records " +
                           std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  PAdicMatrix a(data.prime(), static_cast<int>(n_train), degree + 1);
  for (std::size_t r = 0; r < n_train; ++r) {
    for (int k = 0; k <= degree; ++k) {
      a.set(static_cast<int>(r), k, d.rows[r][static_cast<std::size_t>(k)]);
    }
  }
  LinearSolveResult solved = solve_linear_with_det(a, d.labels);

  MahlerSeries weights{data.prime(), solved.solution};
  FitReport report(RegressionModel(data.prime(), data.dimension(), weights, policy));
  report.mode = "exact";
  report.is_exact = true;
  report.config.degree = degree;
  report.config.steps = 0;
  report.n_train = static_cast<int>(n_train);
  report.n_val = static_cast<int>(data.count(Partition::Validation));
  report.design_det_norm = solved.det_norm;
  report.weights_integral = report.model.is_integral();

  for (std::size_t r = 0; r < n_train; ++r) {
    report.residual_norms.push_back(
        row_residual(solved.solution, d.rows[r], d.labels[r]).norm());
  }
  std::vector<PAdicNumber> candidate;
  candidate.reserve(solved.solution.size());
  for (const auto& w : solved.solution) candidate.push_back(integral_part(w, data.prime()));
  report.certificate =
      max_residual_norm(candidate, d) <= solved.det_norm * solved.det_norm;

  report.train_loss = loss_from_rows(solved.solution, d);
  report.trajectory.push_back(report.train_loss);
  report.milestones.emplace_back(0, report.train_loss);
  return report;
}

bool check_integrality(const std::vector<PAdicNumber>& w0, const Dataset& data,
                       const Rational& a_norm, int guard_digits) {
  if (w0.empty()) throw InvalidArgument("candidate weight vector is empty");
  for (const auto& w : w0) {
    if (w.prime() != data.prime()) throw InvalidArgument("mixed primes");
    if (!w.in_ring()) throw InvalidArgument("candidate weights must lie in Z_p");
  }
  const PrecisionPolicy policy(data.working_digits(), guard_digits);
  const auto d = design_rows(data, static_cast<int>(w0.size()) - 1, Partition::Train, policy);
  if (d.rows.empty()) throw InvalidArgument("empty train partition");
  return max_residual_norm(w0, d) <= a_norm * a_norm;
}

namespace {

struct ChainResult {
  std::vector<PAdicNumber> best_weights;
  LossValue best_loss;
  std::vector<LossValue> trajectory;
  std::vector<std::pair<long long, LossValue>> milestones;
  long long accepted = 0;
};

ChainResult run_chain(const DesignRows& d, const TrainerConfig& cfg, std::uint64_t seed,
                      std::uint32_t prime, const PrecisionPolicy& policy,
                      const std::vector<PAdicNumber>& init) {
  const int width = cfg.degree + 1;
  const int cap = policy.total();
  Rng rng(seed);

  std::vector<PAdicNumber> w = init;
  LossValue current = loss_from_rows(w, d);
  ChainResult out;
  out.best_weights = w;
  out.best_loss = current;
  out.trajectory.push_back(current);
  out.milestones.emplace_back(0, current);

  double beta = cfg.beta0;
  for (long long step = 0; step < cfg.steps; ++step) {
    int radius = 0;
    while (rng.unit_real() < cfg.radius_decay && radius < cap - 1) ++radius;

    std::vector<PAdicNumber> candidate;
    candidate.reserve(static_cast<std::size_t>(width));
    for (int k = 0; k < width; ++k) {
      std::vector<std::uint32_t> digits(static_cast<std::size_t>(cap), 0);
      for (int pos = radius; pos < cap; ++pos) {
        digits[static_cast<std::size_t>(pos)] = rng.digit(prime);
      }
      const PAdicNumber xi = PAdicNumber::from_absolute_digits(prime, digits);
      candidate.push_back(w[static_cast<std::size_t>(k)] + xi);
    }

    const LossValue cand_loss = loss_from_rows(candidate, d);
    const Rational delta = cand_loss.upper() - current.upper();
    bool accept = delta <= 0;  // equal loss accepts
    if (!accept) {
      const double u = rng.unit_real();
      accept = std::log(u) < -beta * delta.convert_to<double>();
    }
    if (accept) {
      w = std::move(candidate);
      current = cand_loss;
      ++out.accepted;
    }
    if (current.upper() < out.best_loss.upper()) {
      out.best_loss = current;
      out.best_weights = w;
      out.milestones.emplace_back(step + 1, current);
    }
    out.trajectory.push_back(out.best_loss);
    beta *= cfg.beta_growth;
  }
  return out;
}

}  // namespace

FitReport fit_stochastic(const Dataset& data, const TrainerConfig& cfg, int guard_digits) {
  cfg.validate();
  if (data.count(Partition::Train) == 0) throw InvalidArgument("empty train partition");
  const PrecisionPolicy policy(data.working_digits(), guard_digits);
  const std::uint32_t prime = data.prime();
  const auto d = design_rows(data, cfg.degree, Partition::Train, policy);

  std::vector<PAdicNumber> init(static_cast<std::size_t>(cfg.degree) + 1,
                                PAdicNumber::zero(prime));
  if (cfg.warm_start && d.rows.size() >= static_cast<std::size_t>(cfg.degree) + 1) {
    const int width = cfg.degree + 1;
    PAdicMatrix sub(prime, width, width);
    std::vector<PAdicNumber> rhs;
    for (int r = 0; r < width; ++r) {
      for (int k = 0; k < width; ++k) {
        sub.set(r, k, d.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
      }
      rhs.push_back(d.labels[static_cast<std::size_t>(r)]);
    }
    try {
      init = solve_linear(sub, rhs);
    } catch (const NumericError&) {
      // Singular sub-system: fall back to the zero start.
    }
  }

  std::vector<ChainResult> results(static_cast<std::size_t>(cfg.chains));
  if (cfg.chains == 1) {
    results[0] = run_chain(d, cfg, cfg.seed, prime, policy, init);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(cfg.chains));
    for (int c = 0; c < cfg.chains; ++c) {
      threads.emplace_back([&, c]() {
        try {
          results[static_cast<std::size_t>(c)] =
              run_chain(d, cfg, derive_seed(cfg.seed, static_cast<std::uint64_t>(c)), prime,
                        policy, init);
        } catch (...) {
          errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  int winner = 0;
  for (int c = 1; c < cfg.chains; ++c) {
    if (results[static_cast<std::size_t>(c)].best_loss.upper() <
        results[static_cast<std::size_t>(winner)].best_loss.upper()) {
      winner = c;
    }
  }
  ChainResult& win = results[static_cast<std::size_t>(winner)];

  MahlerSeries weights{prime, std::move(win.best_weights)};
  FitReport report(RegressionModel(prime, data.dimension(), std::move(weights), policy));
  report.mode = "stochastic";
  report.config = cfg;
  report.n_train = static_cast<int>(data.count(Partition::Train));
  report.n_val = static_cast<int>(data.count(Partition::Validation));
  report.trajectory = std::move(win.trajectory);
  report.milestones = std::move(win.milestones);
  report.train_loss = win.best_loss;
  report.weights_integral = report.model.is_integral();
  report.accepted = win.accepted;
  report.winning_chain = winner;
  return report;
}

GibbsOracleResult gibbs_oracle_step_expectation(const std::vector<PAdicNumber>& w,
                                                double beta, const Dataset& data,
                                                int truncation_digits, int guard_digits) {
  if (w.empty()) throw InvalidArgument("weight vector is empty");
  if (beta < 0.0) throw InvalidArgument("beta must be >= 0");
  if (truncation_digits < 1) throw InvalidArgument("truncation digits must be >= 1");
  for (const auto& wi : w) {
    if (wi.prime() != data.prime()) throw InvalidArgument("mixed primes");
    if (!wi.in_ring()) throw InvalidArgument("weights must lie in Z_p");
  }
  const std::uint32_t prime = data.prime();
  const int width = static_cast<int>(w.size());

  constexpr std::uint64_t kMaxLattice = 1ULL << 20;
  std::uint64_t per_coordinate = 1;
  for (int i = 0; i < truncation_digits; ++i) {
    per_coordinate *= prime;
    if (per_coordinate > kMaxLattice) throw InvalidArgument("oracle lattice too large");
  }
  std::uint64_t count = 1;
  for (int k = 0; k < width; ++k) {
    count *= per_coordinate;
    if (count > kMaxLattice) throw InvalidArgument("oracle lattice too large");
  }

  const PrecisionPolicy policy(data.working_digits(), guard_digits);
  const auto d = design_rows(data, width - 1, Partition::Train, policy);
  if (d.rows.empty()) throw InvalidArgument("empty train partition");

  std::vector<PAdicNumber> lattice;
  lattice.reserve(per_coordinate);
  for (std::uint64_t v = 0; v < per_coordinate; ++v) {
    lattice.push_back(PAdicNumber::from_integer(static_cast<long long>(v), prime, policy));
  }

  const Rational base = loss_from_rows(w, d).upper();

  std::vector<double> deltas(count, 0.0);
  std::vector<double> losses(count, 0.0);
  std::uint64_t improving = 0;
  double delta_min = 0.0;
  std::vector<PAdicNumber> shifted(w.begin(), w.end());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int k = 0; k < width; ++k) {
      shifted[static_cast<std::size_t>(k)] =
          w[static_cast<std::size_t>(k)] + lattice[rest % per_coordinate];
      rest /= per_coordinate;
    }
    const Rational li = loss_from_rows(shifted, d).upper();
    const Rational delta = li - base;
    if (delta < 0) ++improving;
    losses[idx] = li.convert_to<double>();
    const double dd = delta.convert_to<double>();
    deltas[idx] = dd;
    if (dd < delta_min) delta_min = dd;
  }

  // Shifting by the most negative delta keeps every Gibbs weight finite.
  double sum_w = 0.0;
  double sum_wl = 0.0;
  double sum_wd = 0.0;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const double weight = std::exp(-beta * (deltas[idx] - delta_min));
    sum_w += weight;
    sum_wl += weight * losses[idx];
    sum_wd += weight * deltas[idx];
  }

  GibbsOracleResult out;
  out.loss_at_w = base;
  out.expected_loss = sum_wl / sum_w;
  out.log_normalizer = -beta * delta_min + std::log(sum_w / static_cast<double>(count));
  out.dlogn_dbeta = -sum_wd / sum_w;
  out.improving_measure = Rational(improving, count);
  out.lattice_points = count;
  return out;
}

std::string FitReport::to_text() const {
  std::ostringstream out;
  out << "padic-regress-report v1\n";
  out << "mode = " << mode << "\n";
  out << "p = " << model.prime() << "\n";
  out << "n = " << model.dimension() << "\n";
  out << "K = " << model.degree() << "\n";
  out << "M = " << model.policy().working_digits << "\n";
  out << "guard = " << model.policy().guard_digits << "\n";
  out << "N.train = " << n_train << "\n";
  out << "N.val = " << n_val << "\n";
  out << "weights.integral = " << bool_str(weights_integral) << "\n";
  print_loss(out, "train.loss", train_loss);
  if (is_exact) {
    out << "det.norm = " << rational_to_string(design_det_norm) << "\n";
    out << "certificate = " << bool_str(certificate) << "\n";
    for (std::size_t a = 0; a < residual_norms.size(); ++a) {
      out << "residual.norm[" << a << "] = " << rational_to_string(residual_norms[a].value)
          << (residual_norms[a].is_bound ? " (bound)" : "") << "\n";
    }
  } else {
    out << "steps = " << config.steps << "\n";
    out << "beta0 = " << double_str(config.beta0) << "\n";
    out << "beta.growth = " << double_str(config.beta_growth) << "\n";
    out << "radius.q = " << double_str(config.radius_decay) << "\n";
    out << "seed = " << config.seed << "\n";
    out << "chains = " << config.chains << "\n";
    out << "chain.winner = " << winning_chain << "\n";
    out << "accepted = " << accepted << "\n";
  }
  for (const auto& [step, lv] : milestones) {
    out << "milestone = " << step << " " << rational_to_string(lv.upper()) << "\n";
  }
  for (int k = 0; k <= model.degree(); ++k) {
    out << "weight[" << k << "] = "
        << model.weights().weights[static_cast<std::size_t>(k)]
               .truncated_rel(model.policy().working_digits)
               .to_string()
        << "\n";
  }
  return out.str();
}

std::string FitReport::trajectory_csv() const {
  std::ostringstream out;
  out << "step,loss_num,loss_den\n";
  for (const auto& [step, lv] : milestones) {
    const Rational u = lv.upper();
    out << step << "," << numerator(u) << "," << denominator(u) << "\n";
  }
  const long long last_step = static_cast<long long>(trajectory.size()) - 1;
  if (!milestones.empty() && milestones.back().first != last_step && last_step > 0) {
    const Rational u = trajectory.back().upper();
    out << last_step << "," << numerator(u) << "," << denominator(u) << "\n";
  }
  return out.str();
}

}  // namespace padic
