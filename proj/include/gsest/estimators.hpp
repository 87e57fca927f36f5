#pragma once

// Cross-validated stacking of the Grenander and empirical estimators.
//
//   theta = beta * grenander + (1 - beta) * empirical,
//
// with beta minimising the leave-one-out criterion
//
//   CV_d(beta) = (1/n) sum_i L_d(delta_i, theta^{-i}),   d = 1, 2.
//
// CV_1 is affine in beta, so the L1 weight is an endpoint; CV_2 is a
// quadratic (a_n beta^2 - 2 b_n beta) / (n (n-1)^2) + const, minimised in
// closed form. The same machinery with a fixed pmf lambda in place of the
// leave-one-out Grenander estimates gives Stone's weight alpha.

#include <cstddef>
#include <string_view>

#include "gsest/isotonic.hpp"
#include "gsest/pmf.hpp"

namespace gsest {

enum class Loss { L1, L2 };

std::string_view to_string(Loss loss) noexcept;

enum class BetaBranch {
  Ratio,            // b_n / a_n with 0 <= b_n <= a_n
  ClipZero,         // L2: b_n < 0;  L1: B_n >= n
  ClipOne,          // L2: b_n > a_n; L1: B_n < n
  DegenerateAZero,  // L2: a_n == 0 (every leave-one-out vector already decreasing)
};

std::string_view to_string(BetaBranch branch) noexcept;

struct BetaDiagnostics {
  Loss loss = Loss::L2;
  double beta = 0.0;
  double a_n = 0.0;  // L2 only, else NaN
  double b_n = 0.0;  // L2 only, else NaN
  double B_n = 0.0;  // L1 only, else NaN
  BetaBranch branch = BetaBranch::Ratio;
};

struct MixtureFit {
  Pmf theta;
  BetaDiagnostics beta;
  Pmf grenander_part;
  Pmf empirical_part;
};

// a_n below this is the exact-zero case. a_n is sum_j x_j times the squared
// count-scale distance from x - e_j to its projection, which is 0 when nothing
// pools and at least 1/2 otherwise.
inline constexpr double kDegenerateAThreshold = 0.25;

// Stone's cross-validated weight on a fixed pmf lambda. Throws
// InsufficientSample when n < 2.
double stone_alpha(const FrequencyVector& freq, const Pmf& lambda, Loss loss);

BetaDiagnostics grenander_stone_beta(const FrequencyVector& freq, Loss loss);
BetaDiagnostics grenander_stone_beta(const LooProjections& loo, Loss loss);

MixtureFit grenander_stone(const FrequencyVector& freq, Loss loss);

// Combines precomputed parts; `beta` must come from the same sample.
MixtureFit assemble_mixture(const Pmf& grenander_part, const Pmf& empirical_part,
                            const BetaDiagnostics& beta);

// Direct evaluation of the leave-one-out criterion: each distinct observed
// cell j contributes x_j * L_d(e_j, beta * g^{-j} + (1 - beta) (x - e_j)/(n-1)).
// Holding the leave-one-out projections lets a grid of beta values be
// evaluated without re-projecting.
class LeaveOneOutCriterion {
 public:
  explicit LeaveOneOutCriterion(const FrequencyVector& freq);
  explicit LeaveOneOutCriterion(LooProjections loo);

  double operator()(double beta, Loss loss) const;
  const LooProjections& projections() const noexcept { return loo_; }

 private:
  LooProjections loo_;
};

double cv_criterion(const FrequencyVector& freq, double beta, Loss loss);

}  // namespace gsest
