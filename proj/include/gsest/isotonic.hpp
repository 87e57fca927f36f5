#pragma once

// Projection onto the cone of nonincreasing vectors, and the Grenander
// estimator built on it.

#include <cstddef>
#include <span>
#include <vector>

#include "gsest/pmf.hpp"

namespace gsest {

// A vector with values[j] >= values[j+1]. Only produced by
// project_decreasing(), and monotone exactly: every pooled block stores a
// single value.
class DecreasingVector {
 public:
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }

  operator std::span<const double>() const noexcept { return values_; }

  friend bool operator==(const DecreasingVector&, const DecreasingVector&) = default;
  friend DecreasingVector project_decreasing(std::span<const double> v);

 private:
  explicit DecreasingVector(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

// Least-squares projection onto {f : f_0 >= f_1 >= ...} by pool-adjacent-
// violators. Linear time. Equal neighbours are never pooled. Throws
// std::invalid_argument on empty input.
DecreasingVector project_decreasing(std::span<const double> v);

// Isotonic regression of the empirical pmf, on 0..t_n.
Pmf grenander(const FrequencyVector& freq);

// Projection of (x - e_j)/(n-1): the Grenander estimator with one count
// removed from cell j. Length t_n + 1.
Pmf loo_grenander(const FrequencyVector& freq, std::size_t j);

// gamma_j = loo_grenander(freq, j)[j] where x_j > 0, else 0.
std::vector<double> gamma_vector(const FrequencyVector& freq);

// All leave-one-cell-out projections of a sample, kept on the count scale:
// projected[i] = Proj(x - e_{cells[i]}), so that the leave-one-out Grenander
// estimate is projected[i] / (n - 1). Projecting integer counts keeps
// unpooled entries exact integers.
struct LooProjections {
  explicit LooProjections(const FrequencyVector& freq);

  FrequencyVector freq;
  std::vector<std::size_t> cells;           // indices j with x_j > 0, ascending
  std::vector<DecreasingVector> projected;  // one per entry of `cells`
};

}  // namespace gsest
