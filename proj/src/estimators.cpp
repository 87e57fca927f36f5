#include "gsest/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gsest {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_loo(const FrequencyVector& freq) {
  if (freq.n() < 2) throw InsufficientSample("cross-validation requires n >= 2");
}

void require_unit_interval(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("mixture weight must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(Loss loss) noexcept { return loss == Loss::L1 ? "L1" : "L2"; }

std::string_view to_string(BetaBranch branch) noexcept {
  switch (branch) {
    case BetaBranch::Ratio: return "ratio";
    case BetaBranch::ClipZero: return "clip_zero";
    case BetaBranch::ClipOne: return "clip_one";
    case BetaBranch::DegenerateAZero: return "degenerate_a_zero";
  }
  return "unknown";
}

namespace {

// Coefficients of the leave-one-out criterion for the mixture
// w * g^j + (1 - w) * h^j, where h^j = (x - e_j)/(n-1) is the held-out
// empirical pmf and g^j = replacement(j, k) the pmf substituted for it. With
// r = h^j - g^j and u = e_j - h^j,
//
//   CV_2(w) - CV_2(0) = (1/n) sum_j x_j (w^2 |r|^2 + 2 w <u, r>),
//   CV_1(w) - CV_1(0) = -(2/n) w sum_j x_j (g^j_j - h^j_j).
//
// Stone's alpha and the Grenander-Stone beta both go through here, so when
// every g^j equals lambda the two weights agree bit for bit.
struct Coefficients {
  double a;  // (n-1)^2 sum_j x_j |r|^2
  double b;  // -(n-1)^2 sum_j x_j <u, r>
  double B;  // n - (n-1) sum_j x_j (g^j_j - h^j_j)
};

template <class Replacement>
Coefficients cv_coefficients(const FrequencyVector& freq, std::size_t len, Replacement replacement) {
  const auto n = static_cast<double>(freq.n());
  const double m = n - 1.0;
  double quad = 0.0;
  double lin = 0.0;
  double own = 0.0;
  for (std::size_t j = 0; j < freq.size(); ++j) {
    if (freq[j] == 0) continue;
    const double xj = static_cast<double>(freq[j]);
    double rr = 0.0;
    double ur = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      const double delta = k == j ? 1.0 : 0.0;
      const double held = (static_cast<double>(freq[k]) - delta) / m;
      const double r = held - replacement(j, k);
      rr += r * r;
      ur += (delta - held) * r;
    }
    quad += xj * rr;
    lin += xj * ur;
    own += xj * (replacement(j, j) - (xj - 1.0) / m);
  }
  return {m * m * quad, -m * m * lin, n - m * own};
}

}  // namespace

double stone_alpha(const FrequencyVector& freq, const Pmf& lambda, Loss loss) {
  require_loo(freq);
  // Cells past t_n still carry lambda mass, so the sums run over the union
  // support.
  const std::size_t len = std::max(freq.size(), lambda.size());
  const Coefficients c = cv_coefficients(freq, len, [&](std::size_t, std::size_t k) { return lambda[k]; });
  if (loss == Loss::L1) return c.B >= static_cast<double>(freq.n()) ? 0.0 : 1.0;
  if (c.b > c.a) return 1.0;
  return c.a > 0.0 ? std::max(c.b, 0.0) / c.a : 0.0;
}

BetaDiagnostics grenander_stone_beta(const LooProjections& loo, Loss loss) {
  const FrequencyVector& freq = loo.freq;
  const auto n = static_cast<double>(freq.n());
  const double m = n - 1.0;

  // projected[] is indexed by position among the observed cells.
  std::vector<std::size_t> slot(freq.size(), 0);
  for (std::size_t i = 0; i < loo.cells.size(); ++i) slot[loo.cells[i]] = i;
  const Coefficients c = cv_coefficients(freq, freq.size(), [&](std::size_t j, std::size_t k) {
    return loo.projected[slot[j]][k] / m;
  });

  BetaDiagnostics d;
  d.loss = loss;

  if (loss == Loss::L1) {
    d.B_n = c.B;
    d.a_n = kNaN;
    d.b_n = kNaN;
    if (d.B_n >= n) {
      d.beta = 0.0;
      d.branch = BetaBranch::ClipZero;
    } else {
      d.beta = 1.0;
      d.branch = BetaBranch::ClipOne;
    }
    return d;
  }

  d.a_n = c.a;
  d.b_n = c.b;
  d.B_n = kNaN;

  if (std::abs(d.a_n) <= kDegenerateAThreshold) {
    d.beta = 0.0;
    d.branch = BetaBranch::DegenerateAZero;
  } else if (d.b_n < 0.0) {
    d.beta = 0.0;
    d.branch = BetaBranch::ClipZero;
  } else if (d.b_n > d.a_n) {
    d.beta = 1.0;
    d.branch = BetaBranch::ClipOne;
  } else {
    d.beta = d.b_n / d.a_n;
    d.branch = BetaBranch::Ratio;
  }
  return d;
}

BetaDiagnostics grenander_stone_beta(const FrequencyVector& freq, Loss loss) {
  require_loo(freq);
  return grenander_stone_beta(LooProjections(freq), loss);
}

MixtureFit assemble_mixture(const Pmf& grenander_part, const Pmf& empirical_part,
                            const BetaDiagnostics& beta) {
  require_unit_interval(beta.beta);
  const std::size_t len = std::max(grenander_part.size(), empirical_part.size());
  std::vector<double> theta(len);
  for (std::size_t j = 0; j < len; ++j) {
    theta[j] = beta.beta * grenander_part[j] + (1.0 - beta.beta) * empirical_part[j];
  }
  return MixtureFit{Pmf(std::move(theta)), beta, grenander_part, empirical_part};
}

MixtureFit grenander_stone(const FrequencyVector& freq, Loss loss) {
  require_loo(freq);
  const BetaDiagnostics beta = grenander_stone_beta(LooProjections(freq), loss);
  return assemble_mixture(grenander(freq), empirical(freq), beta);
}

LeaveOneOutCriterion::LeaveOneOutCriterion(const FrequencyVector& freq)
    : loo_((require_loo(freq), LooProjections(freq))) {}

LeaveOneOutCriterion::LeaveOneOutCriterion(LooProjections loo) : loo_(std::move(loo)) {}

double LeaveOneOutCriterion::operator()(double beta, Loss loss) const {
  require_unit_interval(beta);
  const FrequencyVector& freq = loo_.freq;
  const auto n = static_cast<double>(freq.n());
  const double denom = n - 1.0;
  double total = 0.0;
  for (std::size_t i = 0; i < loo_.cells.size(); ++i) {
    const std::size_t j = loo_.cells[i];
    const DecreasingVector& c = loo_.projected[i];
    double loss_j = 0.0;
    for (std::size_t k = 0; k < freq.size(); ++k) {
      const double indicator = k == j ? 1.0 : 0.0;
      const double held_out = (static_cast<double>(freq[k]) - indicator) / denom;
      const double theta_k = beta * (c[k] / denom) + (1.0 - beta) * held_out;
      const double r = indicator - theta_k;
      loss_j += loss == Loss::L1 ? std::abs(r) : r * r;
    }
    total += static_cast<double>(freq[j]) * loss_j;
  }
  return total / n;
}

double cv_criterion(const FrequencyVector& freq, double beta, Loss loss) {
  return LeaveOneOutCriterion(freq)(beta, loss);
}

}  // namespace gsest
