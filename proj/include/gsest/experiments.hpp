#pragma once

// Simulation study: the four reference models, paired replications of all
// estimators, scaled-risk curves and band-coverage experiments.
//
// Results are deterministic for a given seed regardless of how many worker
// threads run the replications: each replication draws from its own stream
// derive_seed(seed, {rep, ...}) and results are stored by replication index.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsest/pmf.hpp"

namespace gsest {

// M1 = 0.15 U(3) + 0.1 U(7) + 0.75 U(11)
// M2 = Geom(0.25),            p_j = 0.75 * 0.25^j
// M3 = NBin(7, 0.4),          p_j = C(j+6, j) 0.4^7 0.6^j
// M4 = 3/8 Pois(2) + 5/8 Pois(15)
enum class ModelTag { M1, M2, M3, M4, Custom };

std::string_view to_string(ModelTag tag) noexcept;

struct ModelSpec {
  ModelTag tag = ModelTag::M1;
  // Infinite supports are cut at the first index whose remaining tail mass
  // drops below this, then renormalised.
  double truncation_tail_mass = 1e-12;
  std::optional<Pmf> custom;

  // "M1".."M4"; anything else throws std::invalid_argument.
  static ModelSpec parse(std::string_view tag);
  static ModelSpec from_pmf(Pmf pmf);
};

Pmf model_pmf(const ModelSpec& spec);

enum class Estimator { Empirical, Grenander, GsL1, GsL2 };

inline constexpr Estimator kAllEstimators[] = {Estimator::Empirical, Estimator::Grenander,
                                               Estimator::GsL1, Estimator::GsL2};
inline constexpr Estimator kBandEstimators[] = {Estimator::Empirical, Estimator::GsL1,
                                                Estimator::GsL2};

std::string_view to_string(Estimator e) noexcept;

// The weight on the Grenander component: 0 for the empirical estimator,
// 1 for the Grenander estimator, the cross-validated beta otherwise.
struct ReplicationResult {
  Estimator estimator;
  std::int64_t rep;
  double l2_distance;
  double s2_score;
  double beta;
};

// reps * 4 results ordered by (rep, estimator). All estimators in a
// replication see the same sample.
std::vector<ReplicationResult> run_replications(const ModelSpec& spec, std::int64_t n,
                                                std::int64_t reps, std::uint64_t seed);

struct RiskRow {
  std::int64_t n;
  Estimator estimator;
  double scaled_risk;  // n * mean ||theta - p||_2^2
};

std::vector<RiskRow> risk_curve(const ModelSpec& spec, std::span<const std::int64_t> sizes,
                                std::int64_t reps, std::uint64_t seed);

struct CoverageRow {
  Estimator estimator;
  std::string model;
  std::int64_t n;
  std::int64_t reps;
  std::int64_t covered;
  double covered_fraction;
};

// One row per band estimator (Empirical, GS_L1, GS_L2). A replication counts
// as covered when the band built from the estimate contains the true pmf at
// every index of its (truncated) support.
std::vector<CoverageRow> coverage_experiment(const ModelSpec& spec, std::int64_t n, std::int64_t reps,
                                             double alpha, std::int64_t mc_reps, std::uint64_t seed);

}  // namespace gsest
