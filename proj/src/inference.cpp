#include "gsest/inference.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gsest {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

// Draws one Y into `y` (sized like p); returns its sup norm.
double draw_into(const Pmf& p, std::span<const double> sd, Rng& rng,
                 std::normal_distribution<double>& normal, std::vector<double>& y) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = sd[i] > 0.0 ? sd[i] * normal(rng) : 0.0;
    total += y[i];
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] -= p[i] * total;
    sup = std::max(sup, std::abs(y[i]));
  }
  return sup;
}

std::vector<double> standard_deviations(const Pmf& p) {
  std::vector<double> sd(p.size());
  std::transform(p.mass().begin(), p.mass().end(), sd.begin(), [](double m) { return std::sqrt(m); });
  return sd;
}

}  // namespace

GaussianLimitSample sample_gaussian_limit(const Pmf& p, Rng& rng) {
  GaussianLimitSample s{std::vector<double>(p.size())};
  std::normal_distribution<double> normal;
  draw_into(p, standard_deviations(p), rng, normal, s.values);
  return s;
}

GaussianLimitSample sample_gaussian_limit(const Pmf& p, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_gaussian_limit(p, rng);
}

std::vector<double> sup_norm_draws(const Pmf& p, std::int64_t mc_reps, std::uint64_t seed) {
  if (mc_reps < 1) throw std::invalid_argument("mc_reps must be positive");
  Rng rng = make_rng(seed);
  const std::vector<double> sd = standard_deviations(p);
  std::normal_distribution<double> normal;
  std::vector<double> y(p.size());
  std::vector<double> sups(static_cast<std::size_t>(mc_reps));
  for (double& s : sups) s = draw_into(p, sd, rng, normal, y);
  return sups;
}

double upper_order_statistic(std::vector<double> draws, double alpha) {
  require_alpha(alpha);
  if (draws.empty()) throw std::invalid_argument("no draws");
  const double target = (1.0 - alpha) * static_cast<double>(draws.size());
  // Guard against (1 - alpha) * m landing a rounding error above an integer.
  auto rank = static_cast<std::size_t>(std::ceil(target - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, draws.size());
  auto nth = draws.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(draws.begin(), nth, draws.end());
  return *nth;
}

double estimate_sup_quantile(const Pmf& p, double alpha, std::int64_t mc_reps, std::uint64_t seed) {
  require_alpha(alpha);
  if (mc_reps < 100) throw std::invalid_argument("mc_reps must be at least 100");
  return upper_order_statistic(sup_norm_draws(p, mc_reps, seed), alpha);
}

double ConfidenceBand::half_width() const { return q_hat / std::sqrt(static_cast<double>(n)); }

bool ConfidenceBand::contains(const Pmf& p) const {
  const double h = half_width();
  const std::size_t len = std::max(p.size(), upper.size());
  for (std::size_t j = 0; j < len; ++j) {
    const double lo = j < lower.size() ? lower[j] : 0.0;
    const double hi = j < upper.size() ? upper[j] : h;
    if (p[j] < lo || p[j] > hi) return false;
  }
  return true;
}

ConfidenceBand band_from_quantile(const Pmf& theta, std::int64_t n, double q_hat, double alpha,
                                  std::int64_t mc_reps) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  if (!(q_hat >= 0.0)) throw std::invalid_argument("quantile must be nonnegative");
  ConfidenceBand band;
  band.alpha = alpha;
  band.q_hat = q_hat;
  band.n = n;
  band.mc_reps = mc_reps;
  const double h = band.half_width();
  band.lower.resize(theta.size());
  band.upper.resize(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    band.lower[j] = std::max(theta[j] - h, 0.0);
    band.upper[j] = theta[j] + h;
  }
  return band;
}

ConfidenceBand confidence_band(const Pmf& theta, std::int64_t n, double alpha, std::int64_t mc_reps,
                               std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  return band_from_quantile(theta, n, estimate_sup_quantile(theta, alpha, mc_reps, seed), alpha, mc_reps);
}

}  // namespace gsest
