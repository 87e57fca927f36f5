#include "gsest/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsest {

namespace {

double inner(const Pmf& f, const Pmf& g) {
  const std::size_t len = std::min(f.size(), g.size());
  double s = 0.0;
  for (std::size_t j = 0; j < len; ++j) s += f[j] * g[j];
  return s;
}

constexpr double kDecreasingTolerance = 1e-12;

}  // namespace

double pointwise_loss(std::int64_t observed_index, const Pmf& theta, Loss loss) {
  if (observed_index < 0) throw std::invalid_argument("observed index must be nonnegative");
  const auto obs = static_cast<std::size_t>(observed_index);
  const std::size_t len = std::max(theta.size(), obs + 1);
  double s = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    const double r = (k == obs ? 1.0 : 0.0) - theta[k];
    s += loss == Loss::L1 ? std::abs(r) : r * r;
  }
  return s;
}

Score expected_score(const Pmf& theta, const Pmf& p, ScoreKind kind) {
  const double cross = inner(theta, p);
  if (kind == ScoreKind::S1) return {kind, 2.0 - 2.0 * cross};
  return {kind, 1.0 + inner(theta, theta) - 2.0 * cross};
}

double s1_mixture_profile(const Pmf& h, const Pmf& p, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("mixture weight must lie in [0, 1]");
  const std::size_t len = std::max(h.size(), p.size());
  std::vector<double> f(len);
  for (std::size_t j = 0; j < len; ++j) f[j] = beta * h[j] + (1.0 - beta) * p[j];
  return expected_score(Pmf(std::move(f)), p, ScoreKind::S1).value;
}

double marshall_gap(const Cdf& estimate_cdf, const Cdf& d) {
  double prev_cum = 0.0;
  double prev_inc = 1.0 + kDecreasingTolerance;
  for (double c : d.cum()) {
    const double inc = c - prev_cum;
    if (inc > prev_inc + kDecreasingTolerance) {
      throw std::invalid_argument("reference cdf does not come from a nonincreasing pmf");
    }
    prev_cum = c;
    prev_inc = inc;
  }
  const std::size_t len = std::max(estimate_cdf.size(), d.size());
  double gap = 0.0;
  for (std::size_t j = 0; j < len; ++j) gap = std::max(gap, std::abs(estimate_cdf[j] - d[j]));
  return gap;
}

}  // namespace gsest
