#pragma once

#include <cstdint>

#include "gsest/estimators.hpp"
#include "gsest/pmf.hpp"

namespace gsest {

enum class ScoreKind { S1, S2 };

struct Score {
  ScoreKind kind;
  double value;
};

// L_d(e_observed, theta): total absolute (L1) or squared (L2) deviation of the
// forecast from the indicator of the observed value.
double pointwise_loss(std::int64_t observed_index, const Pmf& theta, Loss loss);

// Expected loss of forecast theta against a fresh draw from p:
//   S1 = 2 - 2 <p, theta>,   S2 = 1 + ||theta||^2 - 2 <p, theta>.
Score expected_score(const Pmf& theta, const Pmf& p, ScoreKind kind);

// S1 of the mixture beta * h + (1 - beta) * p against p. Affine in beta.
double s1_mixture_profile(const Pmf& h, const Pmf& p, double beta);

// sup_j |F_j - D_j| where D must be the distribution function of a
// nonincreasing pmf (increments nonincreasing up to 1e-12), otherwise
// std::invalid_argument.
double marshall_gap(const Cdf& estimate_cdf, const Cdf& d);

}  // namespace gsest
