#include "gsest/experiments.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gsest/estimators.hpp"
#include "gsest/inference.hpp"
#include "gsest/isotonic.hpp"
#include "gsest/scoring.hpp"
#include "parallel.hpp"

namespace gsest {

namespace {

// Emits p_0, p_1, ... of an infinitely supported pmf until the remaining
// tail drops below `tail_mass`, then renormalises.
Pmf truncate_series(const std::function<double(std::size_t)>& term, double tail_mass) {
  if (!(tail_mass > 0.0)) throw std::invalid_argument("truncation tail mass must be positive");
  constexpr std::size_t kMaxSupport = 1u << 20;
  std::vector<double> mass;
  double total = 0.0;
  for (std::size_t j = 0; j < kMaxSupport; ++j) {
    const double p = term(j);
    mass.push_back(p);
    total += p;
    if (1.0 - total < tail_mass) break;
  }
  for (double& m : mass) m /= total;
  return Pmf(std::move(mass));
}

// Ratio-recursive term generators.
std::function<double(std::size_t)> geometric(double theta) {
  return [theta, p = 1.0 - theta](std::size_t) mutable {
    const double out = p;
    p *= theta;
    return out;
  };
}

std::function<double(std::size_t)> negative_binomial(double r, double success) {
  return [r, q = 1.0 - success, p = std::pow(success, r)](std::size_t j) mutable {
    const double out = p;
    p *= (static_cast<double>(j) + r) / (static_cast<double>(j) + 1.0) * q;
    return out;
  };
}

std::function<double(std::size_t)> poisson_mixture(double w, double lambda1, double lambda2) {
  return [w, lambda1, lambda2, p1 = std::exp(-lambda1), p2 = std::exp(-lambda2)](std::size_t j) mutable {
    const double out = w * p1 + (1.0 - w) * p2;
    const double next = static_cast<double>(j) + 1.0;
    p1 *= lambda1 / next;
    p2 *= lambda2 / next;
    return out;
  };
}

Pmf model_m1() {
  std::vector<double> mass(12);
  for (std::size_t j = 0; j < mass.size(); ++j) {
    mass[j] = 0.75 / 12.0 + (j <= 7 ? 0.1 / 8.0 : 0.0) + (j <= 3 ? 0.15 / 4.0 : 0.0);
  }
  return Pmf(std::move(mass));
}

void require_reps(std::int64_t reps) {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
}

std::uint64_t sample_seed(std::uint64_t seed, std::int64_t rep) {
  return derive_seed(seed, {static_cast<std::uint64_t>(rep), 0});
}

std::uint64_t band_seed(std::uint64_t seed, std::int64_t rep) {
  return derive_seed(seed, {static_cast<std::uint64_t>(rep), 1});
}

struct Fits {
  Pmf empirical;
  Pmf grenander;
  MixtureFit gs_l1;
  MixtureFit gs_l2;

  const Pmf& estimate(Estimator e) const {
    switch (e) {
      case Estimator::Empirical: return empirical;
      case Estimator::Grenander: return grenander;
      case Estimator::GsL1: return gs_l1.theta;
      case Estimator::GsL2: return gs_l2.theta;
    }
    throw std::logic_error("unknown estimator");
  }

  double beta(Estimator e) const {
    switch (e) {
      case Estimator::Empirical: return 0.0;
      case Estimator::Grenander: return 1.0;
      case Estimator::GsL1: return gs_l1.beta.beta;
      case Estimator::GsL2: return gs_l2.beta.beta;
    }
    throw std::logic_error("unknown estimator");
  }
};

Fits fit_all(const FrequencyVector& freq) {
  const LooProjections loo(freq);
  Pmf emp = empirical(freq);
  Pmf gren = grenander(freq);
  MixtureFit l1 = assemble_mixture(gren, emp, grenander_stone_beta(loo, Loss::L1));
  MixtureFit l2 = assemble_mixture(gren, emp, grenander_stone_beta(loo, Loss::L2));
  return Fits{std::move(emp), std::move(gren), std::move(l1), std::move(l2)};
}

}  // namespace

std::string_view to_string(ModelTag tag) noexcept {
  switch (tag) {
    case ModelTag::M1: return "M1";
    case ModelTag::M2: return "M2";
    case ModelTag::M3: return "M3";
    case ModelTag::M4: return "M4";
    case ModelTag::Custom: return "Custom";
  }
  return "unknown";
}

ModelSpec ModelSpec::parse(std::string_view tag) {
  for (ModelTag t : {ModelTag::M1, ModelTag::M2, ModelTag::M3, ModelTag::M4}) {
    if (tag == to_string(t)) return ModelSpec{t, 1e-12, std::nullopt};
  }
  throw std::invalid_argument("unknown model tag '" + std::string(tag) + "'");
}

ModelSpec ModelSpec::from_pmf(Pmf pmf) { return ModelSpec{ModelTag::Custom, 1e-12, std::move(pmf)}; }

Pmf model_pmf(const ModelSpec& spec) {
  switch (spec.tag) {
    case ModelTag::M1: return model_m1();
    case ModelTag::M2: return truncate_series(geometric(0.25), spec.truncation_tail_mass);
    case ModelTag::M3: return truncate_series(negative_binomial(7.0, 0.4), spec.truncation_tail_mass);
    case ModelTag::M4: return truncate_series(poisson_mixture(3.0 / 8.0, 2.0, 15.0), spec.truncation_tail_mass);
    case ModelTag::Custom:
      if (!spec.custom) throw std::invalid_argument("custom model without a pmf");
      return *spec.custom;
  }
  throw std::invalid_argument("unknown model tag");
}

std::string_view to_string(Estimator e) noexcept {
  switch (e) {
    case Estimator::Empirical: return "Empirical";
    case Estimator::Grenander: return "Grenander";
    case Estimator::GsL1: return "GS_L1";
    case Estimator::GsL2: return "GS_L2";
  }
  return "unknown";
}

std::vector<ReplicationResult> run_replications(const ModelSpec& spec, std::int64_t n,
                                                std::int64_t reps, std::uint64_t seed) {
  require_reps(reps);
  if (n < 2) throw InsufficientSample("replications require n >= 2");
  const Pmf truth = model_pmf(spec);
  constexpr std::size_t kPerRep = std::size(kAllEstimators);
  std::vector<ReplicationResult> out(static_cast<std::size_t>(reps) * kPerRep);
  detail::parallel_for(reps, [&](std::int64_t rep) {
    const Fits fits = fit_all(sample_frequencies(truth, n, sample_seed(seed, rep)));
    for (std::size_t e = 0; e < kPerRep; ++e) {
      const Estimator est = kAllEstimators[e];
      const Pmf& theta = fits.estimate(est);
      out[static_cast<std::size_t>(rep) * kPerRep + e] =
          ReplicationResult{est, rep, lk_distance(theta, truth, kL2),
                            expected_score(theta, truth, ScoreKind::S2).value, fits.beta(est)};
    }
  });
  return out;
}

std::vector<RiskRow> risk_curve(const ModelSpec& spec, std::span<const std::int64_t> sizes,
                                std::int64_t reps, std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("risk curve needs at least one sample size");
  std::vector<RiskRow> rows;
  for (std::int64_t n : sizes) {
    const auto results = run_replications(spec, n, reps, seed);
    for (Estimator est : kAllEstimators) {
      double sum = 0.0;
      for (const auto& r : results) {
        if (r.estimator == est) sum += r.l2_distance * r.l2_distance;
      }
      rows.push_back(RiskRow{n, est, static_cast<double>(n) * sum / static_cast<double>(reps)});
    }
  }
  return rows;
}

std::vector<CoverageRow> coverage_experiment(const ModelSpec& spec, std::int64_t n, std::int64_t reps,
                                             double alpha, std::int64_t mc_reps, std::uint64_t seed) {
  require_reps(reps);
  if (mc_reps < 100) throw std::invalid_argument("mc_reps must be at least 100");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (n < 2) throw InsufficientSample("coverage experiment requires n >= 2");
  const Pmf truth = model_pmf(spec);
  constexpr std::size_t kBands = std::size(kBandEstimators);
  std::vector<std::array<bool, kBands>> covered(static_cast<std::size_t>(reps));
  detail::parallel_for(reps, [&](std::int64_t rep) {
    const Fits fits = fit_all(sample_frequencies(truth, n, sample_seed(seed, rep)));
    for (std::size_t e = 0; e < kBands; ++e) {
      // Common Monte-Carlo stream across estimators within a replication.
      const ConfidenceBand band =
          confidence_band(fits.estimate(kBandEstimators[e]), n, alpha, mc_reps, band_seed(seed, rep));
      covered[static_cast<std::size_t>(rep)][e] = band.contains(truth);
    }
  });
  std::vector<CoverageRow> rows;
  for (std::size_t e = 0; e < kBands; ++e) {
    std::int64_t hits = 0;
    for (const auto& c : covered) hits += c[e] ? 1 : 0;
    rows.push_back(CoverageRow{kBandEstimators[e], std::string(to_string(spec.tag)), n, reps, hits,
                               static_cast<double>(hits) / static_cast<double>(reps)});
  }
  return rows;
}

}  // namespace gsest
