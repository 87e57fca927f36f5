#include "gsest/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "gsest/estimators.hpp"
#include "gsest/experiments.hpp"
#include "gsest/inference.hpp"
#include "gsest/isotonic.hpp"

namespace gsest::cli {

namespace {

constexpr std::int64_t kMaxIndex = 10'000'000;

struct FitOptions {
  std::string input;
  std::string loss;
  double alpha = 0.05;
  std::int64_t mc = 100000;
  std::uint64_t seed = 0;
};

struct SimulateOptions {
  std::string model;
  std::int64_t n = 0;
  std::int64_t reps = 0;
  std::vector<std::string> losses;
  std::uint64_t seed = 0;
};

struct CoverageOptions {
  std::string model;
  std::int64_t n = 0;
  std::int64_t reps = 0;
  double alpha = 0.05;
  std::int64_t mc = 100000;
  std::uint64_t seed = 0;
};

struct RiskOptions {
  std::string model;
  std::vector<std::int64_t> sizes;
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
};

Loss parse_loss(const std::string& s) { return s == "l1" ? Loss::L1 : Loss::L2; }

bool parse_int(std::string_view tok, std::int64_t& value) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

void cmd_fit(const FitOptions& opt, std::ostream& out) {
  std::ifstream file(opt.input);
  if (!file) throw InputError("cannot open input file '" + opt.input + "'");
  const FrequencyVector freq = parse_frequency_data(file);
  const Loss loss = parse_loss(opt.loss);
  const MixtureFit fit = grenander_stone(freq, loss);
  const ConfidenceBand band = confidence_band(fit.theta, freq.n(), opt.alpha, opt.mc, opt.seed);
  const BetaDiagnostics& b = fit.beta;

  out << "# n=" << freq.n() << '\n'
      << "# t_n=" << freq.t_n() << '\n'
      << "# loss=" << opt.loss << '\n'
      << "# beta=" << format_real(b.beta) << '\n'
      << "# branch=" << to_string(b.branch) << '\n';
  if (loss == Loss::L1) {
    out << "# B_n=" << format_real(b.B_n) << '\n';
  } else {
    out << "# a_n=" << format_real(b.a_n) << '\n' << "# b_n=" << format_real(b.b_n) << '\n';
  }
  out << "# alpha=" << format_real(opt.alpha) << '\n'
      << "# q_hat=" << format_real(band.q_hat) << '\n'
      << "# mc_reps=" << opt.mc << '\n'
      << "# seed=" << opt.seed << '\n';
  out << "index,count,empirical,grenander,theta,band_lower,band_upper\n";
  for (std::size_t j = 0; j <= freq.t_n(); ++j) {
    out << j << ',' << freq[j] << ',' << format_real(fit.empirical_part[j]) << ','
        << format_real(fit.grenander_part[j]) << ',' << format_real(fit.theta[j]) << ','
        << format_real(band.lower[j]) << ',' << format_real(band.upper[j]) << '\n';
  }
}

void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  const ModelSpec spec = ModelSpec::parse(opt.model);
  const bool want_l1 = opt.losses.empty() || std::count(opt.losses.begin(), opt.losses.end(), "l1") > 0;
  const bool want_l2 = opt.losses.empty() || std::count(opt.losses.begin(), opt.losses.end(), "l2") > 0;
  const auto results = run_replications(spec, opt.n, opt.reps, opt.seed);
  out << "model,estimator,rep,l2_distance,s2_score,beta\n";
  for (const auto& r : results) {
    if ((r.estimator == Estimator::GsL1 && !want_l1) || (r.estimator == Estimator::GsL2 && !want_l2)) continue;
    out << opt.model << ',' << to_string(r.estimator) << ',' << r.rep << ',' << format_real(r.l2_distance)
        << ',' << format_real(r.s2_score) << ',' << format_real(r.beta) << '\n';
  }
}

void cmd_coverage(const CoverageOptions& opt, std::ostream& out) {
  const ModelSpec spec = ModelSpec::parse(opt.model);
  const auto rows = coverage_experiment(spec, opt.n, opt.reps, opt.alpha, opt.mc, opt.seed);
  out << "model,estimator,n,reps,covered_fraction\n";
  for (const auto& r : rows) {
    out << r.model << ',' << to_string(r.estimator) << ',' << r.n << ',' << r.reps << ','
        << format_real(r.covered_fraction) << '\n';
  }
}

void cmd_risk(const RiskOptions& opt, std::ostream& out) {
  const ModelSpec spec = ModelSpec::parse(opt.model);
  const auto rows = risk_curve(spec, opt.sizes, opt.reps, opt.seed);
  out << "model,estimator,n,scaled_risk\n";
  for (const auto& r : rows) {
    out << opt.model << ',' << to_string(r.estimator) << ',' << r.n << ',' << format_real(r.scaled_risk) << '\n';
  }
}

}  // namespace

FrequencyVector parse_frequency_data(std::istream& in) {
  std::map<std::int64_t, std::int64_t> cells;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    std::int64_t index = 0;
    std::int64_t count = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], index) || !parse_int(tokens[1], count)) {
      throw InputError("line " + std::to_string(line_no) + ": expected '<index> <count>'");
    }
    if (index < 0 || index > kMaxIndex || count < 0) {
      throw InputError("line " + std::to_string(line_no) + ": index and count must be nonnegative"
                       " (index at most " + std::to_string(kMaxIndex) + ")");
    }
    cells[index] += count;
  }
  if (in.bad()) throw InputError("error reading input");
  std::int64_t n = 0;
  for (const auto& [index, count] : cells) n += count;
  if (n < 2) throw InsufficientSample("sample size n = " + std::to_string(n) + " is below 2");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cells.rbegin()->first) + 1, 0);
  for (const auto& [index, count] : cells) counts[static_cast<std::size_t>(index)] = count;
  return FrequencyVector(std::move(counts));
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grenander-Stone estimation of discrete distributions", "gsest"};
  app.require_subcommand(1);

  const auto loss_names = CLI::IsMember({"l1", "l2"});
  const auto model_names = CLI::IsMember({"M1", "M2", "M3", "M4"});

  FitOptions fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit frequency data and report a global confidence band");
  fit_cmd->add_option("--input", fit.input, "File of '<index> <count>' lines")->required();
  fit_cmd->add_option("--loss", fit.loss, "Cross-validation loss")->required()->check(loss_names);
  fit_cmd->add_option("--alpha", fit.alpha, "Band level")->capture_default_str();
  fit_cmd->add_option("--mc", fit.mc, "Monte-Carlo draws for the band quantile")->capture_default_str();
  fit_cmd->add_option("--seed", fit.seed, "Random seed")->required();

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Per-replication distances, scores and weights");
  sim_cmd->add_option("--model", sim.model)->required()->check(model_names);
  sim_cmd->add_option("--n", sim.n, "Sample size")->required();
  sim_cmd->add_option("--reps", sim.reps)->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--loss", sim.losses, "Restrict stacked estimators to these losses")->check(loss_names);
  sim_cmd->add_option("--seed", sim.seed)->required();

  CoverageOptions cov;
  auto* cov_cmd = app.add_subcommand("coverage", "Empirical coverage of global confidence bands");
  cov_cmd->add_option("--model", cov.model)->required()->check(model_names);
  cov_cmd->add_option("--n", cov.n)->required();
  cov_cmd->add_option("--reps", cov.reps)->required()->check(CLI::PositiveNumber);
  cov_cmd->add_option("--alpha", cov.alpha)->capture_default_str();
  cov_cmd->add_option("--mc", cov.mc)->capture_default_str();
  cov_cmd->add_option("--seed", cov.seed)->required();

  RiskOptions risk;
  auto* risk_cmd = app.add_subcommand("risk", "Scaled risk n E||theta - p||^2 across sample sizes");
  risk_cmd->add_option("--model", risk.model)->required()->check(model_names);
  risk_cmd->add_option("--sizes", risk.sizes, "Comma-separated sample sizes")->required()->delimiter(',');
  risk_cmd->add_option("--reps", risk.reps)->required()->check(CLI::PositiveNumber);
  risk_cmd->add_option("--seed", risk.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gsest: " << e.what() << '\n';
    return kExitUsage;
  }

  // Buffer so a failing command leaves no partial table on stdout.
  std::ostringstream buffer;
  try {
    if (*fit_cmd) cmd_fit(fit, buffer);
    else if (*sim_cmd) cmd_simulate(sim, buffer);
    else if (*cov_cmd) cmd_coverage(cov, buffer);
    else if (*risk_cmd) cmd_risk(risk, buffer);
  } catch (const InsufficientSample& e) {
    err << "gsest: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "gsest: " << e.what() << '\n';
    return kExitUsage;
  }
  out << buffer.str();
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gsest"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gsest::cli
