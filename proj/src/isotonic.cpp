#include "gsest/isotonic.hpp"

#include <stdexcept>

namespace gsest {

namespace {

struct Block {
  double sum;
  std::size_t width;
  double mean() const noexcept { return sum / static_cast<double>(width); }
};

std::vector<double> counts_as_reals(const FrequencyVector& freq) {
  return {freq.counts().begin(), freq.counts().end()};
}

void require_loo(const FrequencyVector& freq) {
  if (freq.n() < 2) throw InsufficientSample("leave-one-out requires n >= 2");
}

std::vector<double> scaled(std::span<const double> v, double denom) {
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] / denom;
  return out;
}

DecreasingVector project_without(const FrequencyVector& freq, std::size_t j) {
  std::vector<double> y = counts_as_reals(freq);
  y[j] -= 1.0;
  return project_decreasing(y);
}

}  // namespace

DecreasingVector project_decreasing(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
  std::vector<Block> stack;
  stack.reserve(v.size());
  for (double x : v) {
    Block b{x, 1};
    // Pool while the new block rises strictly above its left neighbour.
    while (!stack.empty() && b.mean() > stack.back().mean()) {
      b.sum += stack.back().sum;
      b.width += stack.back().width;
      stack.pop_back();
    }
    stack.push_back(b);
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const Block& b : stack) {
    // Width-one blocks keep the input value bit-for-bit.
    out.insert(out.end(), b.width, b.width == 1 ? b.sum : b.mean());
  }
  return DecreasingVector(std::move(out));
}

Pmf grenander(const FrequencyVector& freq) {
  const DecreasingVector g = project_decreasing(counts_as_reals(freq));
  return Pmf(scaled(g.values(), static_cast<double>(freq.n())));
}

Pmf loo_grenander(const FrequencyVector& freq, std::size_t j) {
  require_loo(freq);
  if (freq[j] < 1) throw std::invalid_argument("leave-one-out cell must have a positive count");
  const DecreasingVector g = project_without(freq, j);
  return Pmf(scaled(g.values(), static_cast<double>(freq.n() - 1)));
}

std::vector<double> gamma_vector(const FrequencyVector& freq) {
  require_loo(freq);
  const LooProjections loo(freq);
  std::vector<double> gamma(freq.size(), 0.0);
  const auto denom = static_cast<double>(freq.n() - 1);
  for (std::size_t i = 0; i < loo.cells.size(); ++i) {
    const std::size_t j = loo.cells[i];
    gamma[j] = loo.projected[i][j] / denom;
  }
  return gamma;
}

LooProjections::LooProjections(const FrequencyVector& f) : freq(f) {
  require_loo(freq);
  for (std::size_t j = 0; j < freq.size(); ++j) {
    if (freq[j] > 0) {
      cells.push_back(j);
      projected.push_back(project_without(freq, j));
    }
  }
}

}  // namespace gsest
