#pragma once

// Core probability-vector types.
//
// All vectors live on a finite support 0..m with an implicit zero tail:
// indexing past the stored range reads 0 (or 1 for a Cdf), and binary
// operations zero-pad the shorter operand.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsest/rng.hpp"

namespace gsest {

inline constexpr double kPmfSumTolerance = 1e-10;

// Raised when a leave-one-out quantity is requested for a sample with n < 2.
class InsufficientSample : public std::domain_error {
 public:
  explicit InsufficientSample(const std::string& what) : std::domain_error(what) {}
};

// Counts x_0..x_t of a sample on the nonnegative integers. Trailing zero cells
// are trimmed on construction, so size() == t_n() + 1.
class FrequencyVector {
 public:
  explicit FrequencyVector(std::vector<std::int64_t> counts);

  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t n() const noexcept { return n_; }
  std::size_t t_n() const noexcept { return counts_.size() - 1; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::int64_t operator[](std::size_t j) const noexcept { return j < counts_.size() ? counts_[j] : 0; }

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t n_ = 0;
};

class Pmf {
 public:
  // Throws std::invalid_argument on negative/non-finite entries, an empty
  // vector, or a total mass further than kPmfSumTolerance from 1.
  explicit Pmf(std::vector<double> mass);

  static Pmf point_mass(std::size_t j);

  std::span<const double> mass() const noexcept { return mass_; }
  const std::vector<double>& values() const noexcept { return mass_; }
  std::size_t size() const noexcept { return mass_.size(); }
  double operator[](std::size_t j) const noexcept { return j < mass_.size() ? mass_[j] : 0.0; }

  operator std::span<const double>() const noexcept { return mass_; }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  std::vector<double> mass_;
};

class Cdf {
 public:
  explicit Cdf(std::vector<double> cum);

  std::span<const double> cum() const noexcept { return cum_; }
  std::size_t size() const noexcept { return cum_.size(); }
  // Past the stored range the distribution function has reached its total.
  double operator[](std::size_t j) const noexcept { return j < cum_.size() ? cum_[j] : cum_.back(); }

 private:
  std::vector<double> cum_;
};

// Order k of an l_k norm, k in {1, 2, ...} or infinity.
class NormOrder {
 public:
  static constexpr NormOrder finite(unsigned k) {
    if (k == 0) throw std::invalid_argument("norm order must be positive");
    return NormOrder(k);
  }
  static constexpr NormOrder infinity() noexcept { return NormOrder(0); }

  constexpr bool is_infinite() const noexcept { return k_ == 0; }
  constexpr unsigned k() const noexcept { return k_; }

 private:
  constexpr explicit NormOrder(unsigned k) noexcept : k_(k) {}
  unsigned k_;
};

inline constexpr NormOrder kL1 = NormOrder::finite(1);
inline constexpr NormOrder kL2 = NormOrder::finite(2);
inline constexpr NormOrder kLInf = NormOrder::infinity();

// p_hat_j = x_j / n on 0..t_n.
Pmf empirical(const FrequencyVector& freq);

// ||f - g||_k with zero padding.
double lk_distance(std::span<const double> f, std::span<const double> g, NormOrder k);

Cdf cdf(const Pmf& f);

// Multinomial(n, p) draw.
FrequencyVector sample_frequencies(const Pmf& p, std::int64_t n, Rng& rng);
FrequencyVector sample_frequencies(const Pmf& p, std::int64_t n, std::uint64_t seed);

}  // namespace gsest
