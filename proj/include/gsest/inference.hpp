#pragma once

// Global confidence bands from the Gaussian limit of the empirical process.
//
// Y_p is a centred Gaussian vector with covariance p_i 1{i = i'} - p_i p_i'.
// The sup-norm quantile q of Y_theta is estimated by Monte Carlo and the band
// is [max(theta_j - q / sqrt(n), 0), theta_j + q / sqrt(n)] for every j.

#include <cstdint>
#include <vector>

#include "gsest/pmf.hpp"
#include "gsest/rng.hpp"

namespace gsest {

struct GaussianLimitSample {
  std::vector<double> values;
};

// Y_i = W_i - p_i * sum_k W_k with independent W_i ~ N(0, p_i). On the
// simplex this reproduces the covariance exactly and sums to zero.
GaussianLimitSample sample_gaussian_limit(const Pmf& p, Rng& rng);
GaussianLimitSample sample_gaussian_limit(const Pmf& p, std::uint64_t seed);

// ||Y^(r)||_inf for r = 1..mc_reps.
std::vector<double> sup_norm_draws(const Pmf& p, std::int64_t mc_reps, std::uint64_t seed);

// ceil((1 - alpha) * draws.size())-th smallest draw.
double upper_order_statistic(std::vector<double> draws, double alpha);

// Throws std::invalid_argument unless alpha is in (0, 1) and mc_reps >= 100.
double estimate_sup_quantile(const Pmf& p, double alpha, std::int64_t mc_reps, std::uint64_t seed);

struct ConfidenceBand {
  std::vector<double> lower;
  std::vector<double> upper;
  double alpha = 0.0;
  double q_hat = 0.0;
  std::int64_t n = 0;
  std::int64_t mc_reps = 0;

  double half_width() const;
  // True when lower_j <= p_j <= upper_j at every index of either support.
  // Outside the stored range the band is [0, q_hat / sqrt(n)].
  bool contains(const Pmf& p) const;
};

ConfidenceBand band_from_quantile(const Pmf& theta, std::int64_t n, double q_hat, double alpha,
                                  std::int64_t mc_reps);

ConfidenceBand confidence_band(const Pmf& theta, std::int64_t n, double alpha, std::int64_t mc_reps,
                               std::uint64_t seed);

}  // namespace gsest
