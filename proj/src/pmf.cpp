#include "gsest/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace gsest {

FrequencyVector::FrequencyVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (std::int64_t c : counts_) {
    if (c < 0) throw std::invalid_argument("frequency counts must be nonnegative");
    n_ += c;
  }
  if (n_ < 1) throw std::invalid_argument("frequency vector must contain at least one observation");
  while (counts_.back() == 0) counts_.pop_back();
}

Pmf::Pmf(std::vector<double> mass) : mass_(std::move(mass)) {
  if (mass_.empty()) throw std::invalid_argument("pmf must have at least one cell");
  double total = 0.0;
  for (double m : mass_) {
    if (!std::isfinite(m) || m < 0.0) throw std::invalid_argument("pmf entries must be finite and nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > kPmfSumTolerance) {
    throw std::invalid_argument("pmf mass sums to " + std::to_string(total) + ", not 1");
  }
}

Pmf Pmf::point_mass(std::size_t j) {
  std::vector<double> mass(j + 1, 0.0);
  mass[j] = 1.0;
  return Pmf(std::move(mass));
}

Cdf::Cdf(std::vector<double> cum) : cum_(std::move(cum)) {
  if (cum_.empty()) throw std::invalid_argument("cdf must have at least one cell");
  double prev = 0.0;
  for (double c : cum_) {
    if (!std::isfinite(c) || c < prev || c > 1.0 + kPmfSumTolerance) {
      throw std::invalid_argument("cdf must be nondecreasing within [0, 1]");
    }
    prev = c;
  }
  if (std::abs(cum_.back() - 1.0) > kPmfSumTolerance) throw std::invalid_argument("cdf must end at 1");
}

Pmf empirical(const FrequencyVector& freq) {
  std::vector<double> mass(freq.size());
  const auto n = static_cast<double>(freq.n());
  std::transform(freq.counts().begin(), freq.counts().end(), mass.begin(),
                 [n](std::int64_t c) { return static_cast<double>(c) / n; });
  return Pmf(std::move(mass));
}

double lk_distance(std::span<const double> f, std::span<const double> g, NormOrder k) {
  const std::size_t len = std::max(f.size(), g.size());
  auto at = [](std::span<const double> v, std::size_t j) { return j < v.size() ? v[j] : 0.0; };
  double acc = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    const double d = std::abs(at(f, j) - at(g, j));
    if (k.is_infinite()) {
      acc = std::max(acc, d);
    } else if (k.k() == 1) {
      acc += d;
    } else if (k.k() == 2) {
      acc += d * d;
    } else {
      acc += std::pow(d, static_cast<double>(k.k()));
    }
  }
  if (k.is_infinite() || k.k() == 1) return acc;
  if (k.k() == 2) return std::sqrt(acc);
  return std::pow(acc, 1.0 / static_cast<double>(k.k()));
}

Cdf cdf(const Pmf& f) {
  std::vector<double> cum(f.size());
  std::partial_sum(f.mass().begin(), f.mass().end(), cum.begin());
  // Rounding can push the running sum a hair above 1.
  for (double& c : cum) c = std::min(c, 1.0 + kPmfSumTolerance);
  return Cdf(std::move(cum));
}

FrequencyVector sample_frequencies(const Pmf& p, std::int64_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample size must be positive");
  // Conditional binomial decomposition of the multinomial.
  std::vector<std::int64_t> counts(p.size(), 0);
  std::size_t last = p.size() - 1;
  while (last > 0 && p[last] == 0.0) --last;
  std::vector<double> tail(last + 2, 0.0);
  for (std::size_t j = last + 1; j-- > 0;) tail[j] = tail[j + 1] + p[j];
  std::int64_t remaining = n;
  for (std::size_t j = 0; j <= last && remaining > 0; ++j) {
    if (j == last) {
      counts[j] = remaining;
      break;
    }
    const double q = tail[j] > 0.0 ? std::clamp(p[j] / tail[j], 0.0, 1.0) : 1.0;
    std::int64_t c = 0;
    if (q >= 1.0) {
      c = remaining;
    } else if (q > 0.0) {
      std::binomial_distribution<std::int64_t> binom(remaining, q);
      c = binom(rng);
    }
    counts[j] = c;
    remaining -= c;
  }
  return FrequencyVector(std::move(counts));
}

FrequencyVector sample_frequencies(const Pmf& p, std::int64_t n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_frequencies(p, n, rng);
}

}  // namespace gsest
