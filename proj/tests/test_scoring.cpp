#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gsest/isotonic.hpp"
#include "gsest/scoring.hpp"
#include "oracles.hpp"

using namespace gsest;
using Catch::Approx;

TEST_CASE("pointwise_loss", "[scoring]") {
  const Pmf half({0.5, 0.5});
  CHECK(pointwise_loss(0, half, Loss::L1) == Approx(1.0));
  CHECK(pointwise_loss(0, half, Loss::L2) == Approx(0.5));
  CHECK(pointwise_loss(2, Pmf::point_mass(2), Loss::L1) == 0.0);
  CHECK(pointwise_loss(2, Pmf::point_mass(2), Loss::L2) == 0.0);
  // Observation outside the forecast's support.
  CHECK(pointwise_loss(4, half, Loss::L1) == Approx(2.0));
  CHECK_THROWS_AS(pointwise_loss(-1, half, Loss::L2), std::invalid_argument);
}

TEST_CASE("expected_score", "[scoring]") {
  const Pmf half({0.5, 0.5});
  CHECK(expected_score(half, half, ScoreKind::S1).value == Approx(1.0));
  const Pmf p({0.6, 0.3, 0.1});
  CHECK(expected_score(p, p, ScoreKind::S2).value == Approx(1.0 - (0.36 + 0.09 + 0.01)));
  CHECK(expected_score(Pmf({1.0}), Pmf({0.9, 0.1}), ScoreKind::S1).value == Approx(0.2));
  CHECK(expected_score(half, half, ScoreKind::S2).kind == ScoreKind::S2);
}

TEST_CASE("expected_score is the mean pointwise loss", "[scoring][property]") {
  // The two kinds are the expectations of the L1 and L2 pointwise losses when
  // the observation is drawn from p.
  const Pmf p({0.5, 0.2, 0.2, 0.1});
  const Pmf theta({0.1, 0.4, 0.3, 0.0, 0.2});
  std::mt19937_64 rng(31);
  std::discrete_distribution<std::int64_t> draw(p.values().begin(), p.values().end());
  constexpr int kDraws = 100000;
  for (auto [loss, kind] : {std::pair{Loss::L1, ScoreKind::S1}, std::pair{Loss::L2, ScoreKind::S2}}) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double l = pointwise_loss(draw(rng), theta, loss);
      sum += l;
      sum_sq += l * l;
    }
    const double mean = sum / kDraws;
    const double se = std::sqrt((sum_sq / kDraws - mean * mean) / kDraws);
    CHECK(std::abs(mean - expected_score(theta, p, kind).value) <= 3.0 * se);
  }

  // Exact check by enumeration over the outcomes.
  for (auto [loss, kind] : {std::pair{Loss::L1, ScoreKind::S1}, std::pair{Loss::L2, ScoreKind::S2}}) {
    double exact = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) exact += p[j] * pointwise_loss(static_cast<std::int64_t>(j), theta, loss);
    CHECK(exact == Approx(expected_score(theta, p, kind).value).margin(1e-12));
  }
}

TEST_CASE("S2 is strictly proper", "[scoring][property]") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Pmf p = oracle::random_pmf(rng, 1 + trial % 10);
    const Pmf theta = oracle::random_pmf(rng, 1 + (trial * 7) % 10);
    const double gap = expected_score(theta, p, ScoreKind::S2).value - expected_score(p, p, ScoreKind::S2).value;
    // The gap equals ||theta - p||^2.
    const double d = lk_distance(theta, p, kL2);
    REQUIRE(gap == Approx(d * d).margin(1e-12));
    if (d > 0.0) REQUIRE(gap > 0.0);
  }
}

TEST_CASE("S1 profile of a mixture is affine", "[scoring][property]") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Pmf p = oracle::random_pmf(rng, 1 + trial % 8);
    const Pmf h = oracle::random_pmf(rng, 1 + (trial * 3) % 8);
    const double f0 = s1_mixture_profile(h, p, 0.0);
    const double f1 = s1_mixture_profile(h, p, 1.0);
    const double beta = u(rng);
    REQUIRE(std::abs(s1_mixture_profile(h, p, beta) - ((1.0 - beta) * f0 + beta * f1)) <= 1e-12);
  }
  CHECK_THROWS_AS(s1_mixture_profile(Pmf({1.0}), Pmf({1.0}), 1.5), std::invalid_argument);
}

TEST_CASE("marshall_gap", "[scoring]") {
  CHECK(marshall_gap(Cdf({0.4, 1.0}), Cdf({0.6, 1.0})) == Approx(0.2));
  CHECK(marshall_gap(Cdf({1.0}), Cdf({0.5, 1.0})) == Approx(0.5));
  // Increments 0.2, 0.8 are increasing, so D is not concave.
  CHECK_THROWS_AS(marshall_gap(Cdf({0.4, 1.0}), Cdf({0.2, 1.0})), std::invalid_argument);
}

TEST_CASE("Grenander is never further from a concave cdf than the empirical cdf", "[scoring][property]") {
  std::mt19937_64 rng(34);
  for (int sample = 0; sample < 200; ++sample) {
    const FrequencyVector f = oracle::random_frequencies(rng, 15, 150);
    const Cdf g = cdf(grenander(f));
    const Cdf e = cdf(empirical(f));
    for (int k = 0; k < 20; ++k) {
      const Cdf d = cdf(oracle::random_decreasing_pmf(rng, 1 + (sample + k) % 20));
      REQUIRE(marshall_gap(g, d) <= marshall_gap(e, d) + 1e-12);
    }
  }
}
