// Command-line front end: generate / fit / predict / eval / inspect over
// the dataset and model file formats.

#include "padic/dataset.hpp"
#include "padic/model.hpp"
#include "padic/training.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace padic;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
  if (!out) throw FormatError("write failed for '" + path + "'");
}

Rational parse_fraction(const std::string& text) {
  try {
    const std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string head = text.substr(0, dot);
      const std::string tail = text.substr(dot + 1);
      BigInt den = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
      return Rational(BigInt(head + tail), den);
    }
    return Rational(BigInt(text));
  } catch (const std::exception&) {
    throw InvalidArgument("bad fraction '" + text + "'");
  }
}

Partition parse_partition(const std::string& text) {
  if (text == "train") return Partition::Train;
  if (text == "val") return Partition::Validation;
  if (text == "all") return Partition::All;
  throw InvalidArgument("bad partition '" + text + "' (expected train|val|all)");
}

void print_loss_lines(std::ostream& out, const std::string& key, const LossValue& l) {
  out << key << " = " << rational_to_string(l.value) << "\n";
  out << key << ".is_bound = " << (l.bound_flag ? "true" : "false") << "\n";
  out << key << ".upper = " << rational_to_string(l.upper()) << "\n";
}

struct GenOptions {
  std::uint32_t p = 0;
  int n = 1;
  int count = 0;
  int m = 32;
  std::string target;
  std::uint64_t seed = 0;
  std::string train_frac = "1";
  std::string out;
  int noise_e = 0;
  double noise_q = 0.0;
};

int cmd_gen(const GenOptions& opt) {
  require_prime(opt.p);
  TargetSpec spec = TargetSpec::parse(opt.target, opt.p);
  if (opt.noise_e > 0) {
    spec.noise_enabled = true;
    spec.noise_exponent = opt.noise_e;
    spec.noise_probability = opt.noise_q;
  }
  spec.validate(opt.p, opt.n);
  Dataset data = generate(spec, opt.n, opt.count, opt.p, opt.m, opt.seed);
  data = split(data, parse_fraction(opt.train_frac), opt.seed);
  write_file(opt.out, write_dataset(data));
  std::cout << "target = " << spec.to_string() << "\n";
  std::cout << "N = " << data.size() << "\n";
  std::cout << "N.train = " << data.count(Partition::Train) << "\n";
  std::cout << "N.val = " << data.count(Partition::Validation) << "\n";
  std::cout << "out = " << opt.out << "\n";
  return 0;
}

struct FitOptions {
  std::string in;
  std::string out;
  std::string mode = "exact";
  int k = -1;
  long long steps = 1000;
  double beta0 = 1.0;
  double beta_growth = 1.001;
  double radius_q = 0.5;
  int chains = 1;
  std::uint64_t seed = 0;
  int guard = kDefaultGuardDigits;
  bool warm_start = false;
  std::string trajectory;
};

int cmd_fit(const FitOptions& opt) {
  const Dataset data = parse_dataset(read_file(opt.in));
  const std::size_t n_train = data.count(Partition::Train);
  if (n_train == 0) {
    std::cerr << "error: empty train partition\n";
    return 3;
  }
  FitReport report = [&]() {
    if (opt.mode == "exact") {
      if (opt.k >= 0 && opt.k != static_cast<int>(n_train) - 1) {
        throw InvalidArgument("exact mode requires K = N_train - 1 = " +
                              std::to_string(n_train - 1));
      }
      return fit_exact(data, opt.guard);
    }
    if (opt.mode != "stochastic") {
      throw InvalidArgument("bad mode '" + opt.mode + "' (expected exact|stochastic)");
    }
    if (opt.k < 0) throw InvalidArgument("stochastic mode requires --K");
    TrainerConfig cfg;
    cfg.degree = opt.k;
    cfg.steps = opt.steps;
    cfg.beta0 = opt.beta0;
    cfg.beta_growth = opt.beta_growth;
    cfg.radius_decay = opt.radius_q;
    cfg.seed = opt.seed;
    cfg.chains = opt.chains;
    cfg.warm_start = opt.warm_start;
    return fit_stochastic(data, cfg, opt.guard);
  }();
  write_file(opt.out, write_model(report.model));
  if (!opt.trajectory.empty()) write_file(opt.trajectory, report.trajectory_csv());
  std::cout << report.to_text();
  return 0;
}

struct EvalOptions {
  std::string model;
  std::string in;
  std::string partition = "all";
  int guard = kDefaultGuardDigits;
};

int cmd_eval(const EvalOptions& opt) {
  const RegressionModel model = parse_model(read_file(opt.model), opt.guard);
  const Dataset data = parse_dataset(read_file(opt.in));
  if (model.prime() != data.prime()) {
    throw FormatError("prime mismatch: model p=" + std::to_string(model.prime()) +
                      ", dataset p=" + std::to_string(data.prime()));
  }
  if (model.dimension() != data.dimension()) {
    throw FormatError("dimension mismatch: model n=" + std::to_string(model.dimension()) +
                      ", dataset n=" + std::to_string(data.dimension()));
  }
  if (model.policy().working_digits != data.working_digits()) {
    throw FormatError("precision mismatch: model M=" +
                      std::to_string(model.policy().working_digits) + ", dataset M=" +
                      std::to_string(data.working_digits()));
  }
  const Partition part = parse_partition(opt.partition);
  std::cout << "p = " << model.prime() << "\n";
  std::cout << "n = " << model.dimension() << "\n";
  std::cout << "K = " << model.degree() << "\n";
  std::cout << "M = " << model.policy().working_digits << "\n";
  std::cout << "N.train = " << data.count(Partition::Train) << "\n";
  std::cout << "N.val = " << data.count(Partition::Validation) << "\n";
  std::cout << "weights.integral = " << (model.is_integral() ? "true" : "false") << "\n";
  const bool want_train = part != Partition::Validation;
  const bool want_val = part != Partition::Train;
  if (part != Partition::All && data.count(part) == 0) {
    throw FormatError("empty partition '" + opt.partition + "'");
  }
  if (want_train && data.count(Partition::Train) > 0) {
    print_loss_lines(std::cout, "train.loss", loss(model, data, Partition::Train));
  }
  if (want_val && data.count(Partition::Validation) > 0) {
    print_loss_lines(std::cout, "val.loss", loss(model, data, Partition::Validation));
  }
  if (part == Partition::All) {
    if (data.size() == 0) throw FormatError("empty dataset");
    print_loss_lines(std::cout, "all.loss", loss(model, data, Partition::All));
  }
  return 0;
}

struct PredictOptions {
  std::string model;
  std::string in;
  std::string point;
  std::string out;
  int guard = kDefaultGuardDigits;
};

int cmd_predict(const PredictOptions& opt) {
  const RegressionModel model = parse_model(read_file(opt.model), opt.guard);
  const int m = model.policy().working_digits;
  std::ostringstream lines;
  if (!opt.point.empty()) {
    std::vector<PAdicNumber> coords;
    std::size_t pos = 0;
    const std::string& text = opt.point;
    while (true) {
      const std::size_t next = text.find(';', pos);
      const std::string tok =
          text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      coords.push_back(PAdicNumber::parse(tok, model.prime(), model.policy()));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (static_cast<int>(coords.size()) != model.dimension()) {
      throw FormatError("point has " + std::to_string(coords.size()) +
                        " coordinates, model needs " + std::to_string(model.dimension()));
    }
    const PointND x(model.prime(), std::move(coords));
    lines << model.predict(x).truncated_rel(m).to_string() << "\n";
  } else if (!opt.in.empty()) {
    const Dataset data = parse_dataset(read_file(opt.in));
    if (model.prime() != data.prime() || model.dimension() != data.dimension()) {
      throw FormatError("model/dataset prime or dimension mismatch");
    }
    for (const auto& rec : data.records()) {
      lines << model.predict(rec.x).truncated_rel(m).to_string() << "\n";
    }
  } else {
    throw InvalidArgument("predict needs --in or --point");
  }
  if (opt.out.empty()) {
    std::cout << lines.str();
  } else {
    write_file(opt.out, lines.str());
  }
  return 0;
}

int cmd_inspect(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string first;
  while (std::getline(in, first)) {
    if (!first.empty() && first.back() == '\r') first.pop_back();
    if (!first.empty()) break;
  }
  if (first.rfind("padic-regress-data", 0) == 0) {
    const Dataset data = parse_dataset(text);
    std::cout << "file.kind = dataset\n";
    std::cout << "p = " << data.prime() << "\n";
    std::cout << "n = " << data.dimension() << "\n";
    std::cout << "M = " << data.working_digits() << "\n";
    std::cout << "N = " << data.size() << "\n";
    std::cout << "N.train = " << data.count(Partition::Train) << "\n";
    std::cout << "N.val = " << data.count(Partition::Validation) << "\n";
    for (const auto& c : data.comments()) std::cout << "comment = " << c << "\n";
    return 0;
  }
  if (first.rfind("padic-regress-model", 0) == 0) {
    const RegressionModel model = parse_model(text);
    std::cout << "file.kind = model\n";
    std::cout << "p = " << model.prime() << "\n";
    std::cout << "n = " << model.dimension() << "\n";
    std::cout << "K = " << model.degree() << "\n";
    std::cout << "M = " << model.policy().working_digits << "\n";
    std::cout << "weights.integral = " << (model.is_integral() ? "true" : "false") << "\n";
    return 0;
  }
  throw FormatError("unrecognized file header in '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic polynomial regression: Mahler series over interleaved digits"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a synthetic dataset");
  gen_cmd->add_option("--p", gen.p, "prime")->required();
  gen_cmd->add_option("--n", gen.n, "input dimension")->required();
  gen_cmd->add_option("--N", gen.count, "number of records")->required();
  gen_cmd->add_option("--M", gen.m, "working digits");
  gen_cmd->add_option("--target", gen.target, "target family, e.g. mahler:0,1")->required();
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--train-frac", gen.train_frac, "train fraction (rational or decimal)");
  gen_cmd->add_option("--out", gen.out, "output dataset path")->required();
  gen_cmd->add_option("--noise-e", gen.noise_e, "noise exponent e (adds u*p^e)");
  gen_cmd->add_option("--noise-q", gen.noise_q, "noise probability");

  FitOptions fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a model to a dataset");
  fit_cmd->add_option("--in", fit.in, "input dataset path")->required();
  fit_cmd->add_option("--out", fit.out, "output model path")->required();
  fit_cmd->add_option("--mode", fit.mode, "exact|stochastic");
  fit_cmd->add_option("--K", fit.k, "series degree");
  fit_cmd->add_option("--steps", fit.steps, "random-walk steps");
  fit_cmd->add_option("--beta0", fit.beta0, "initial beta");
  fit_cmd->add_option("--beta-growth", fit.beta_growth, "beta growth factor per step");
  fit_cmd->add_option("--radius-q", fit.radius_q, "proposal radius decay q");
  fit_cmd->add_option("--chains", fit.chains, "independent chains");
  fit_cmd->add_option("--seed", fit.seed, "random seed");
  fit_cmd->add_option("--guard", fit.guard, "guard digits");
  fit_cmd->add_flag("--warm-start", fit.warm_start, "initialize from an exact sub-fit");
  fit_cmd->add_option("--trajectory", fit.trajectory, "write loss trajectory CSV here");

  EvalOptions eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a model on a dataset");
  eval_cmd->add_option("--model", eval.model, "model path")->required();
  eval_cmd->add_option("--in", eval.in, "dataset path")->required();
  eval_cmd->add_option("--partition", eval.partition, "train|val|all");
  eval_cmd->add_option("--guard", eval.guard, "guard digits");

  PredictOptions pred;
  CLI::App* pred_cmd = app.add_subcommand("predict", "predict labels");
  pred_cmd->add_option("--model", pred.model, "model path")->required();
  pred_cmd->add_option("--in", pred.in, "dataset path");
  pred_cmd->add_option("--point", pred.point, "single point 'x1 ; x2 ; ...'");
  pred_cmd->add_option("--out", pred.out, "output path (default stdout)");
  pred_cmd->add_option("--guard", pred.guard, "guard digits");

  std::string inspect_path;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "summarize a dataset or model file");
  inspect_cmd->add_option("--in", inspect_path, "file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (fit_cmd->parsed()) return cmd_fit(fit);
    if (eval_cmd->parsed()) return cmd_eval(eval);
    if (pred_cmd->parsed()) return cmd_predict(pred);
    if (inspect_cmd->parsed()) return cmd_inspect(inspect_path);
  } catch (const padic::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const padic::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const padic::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
