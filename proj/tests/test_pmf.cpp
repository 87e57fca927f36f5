#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gsest/pmf.hpp"
#include "oracles.hpp"

using namespace gsest;
using Catch::Approx;

TEST_CASE("FrequencyVector invariants", "[pmf]") {
  const FrequencyVector f({2, 1, 1, 0, 0});
  CHECK(f.n() == 4);
  CHECK(f.t_n() == 2);
  CHECK(f.size() == 3);
  CHECK(f[7] == 0);

  CHECK_THROWS_AS(FrequencyVector({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyVector({}), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyVector({3, -1}), std::invalid_argument);
}

TEST_CASE("Pmf validation", "[pmf]") {
  CHECK_NOTHROW(Pmf({0.5, 0.5}));
  CHECK_THROWS_AS(Pmf({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf({}), std::invalid_argument);
  CHECK(Pmf::point_mass(2).values() == std::vector<double>{0.0, 0.0, 1.0});
  CHECK(Pmf({1.0})[5] == 0.0);
}

TEST_CASE("empirical", "[pmf]") {
  CHECK(empirical(FrequencyVector({2, 1, 1})).values() == std::vector<double>{0.5, 0.25, 0.25});
  CHECK(empirical(FrequencyVector({4})).values() == std::vector<double>{1.0});
  CHECK(empirical(FrequencyVector({1, 2, 1})).values() == std::vector<double>{0.25, 0.5, 0.25});
}

TEST_CASE("lk_distance", "[pmf]") {
  const std::vector<double> f{0.3, 0.7};
  CHECK(lk_distance(f, f, kL1) == 0.0);
  CHECK(lk_distance(f, f, kLInf) == 0.0);

  const std::vector<double> a{1.0, 0.0};
  const std::vector<double> b{0.0, 1.0};
  CHECK(lk_distance(a, b, kL1) == 2.0);
  CHECK(lk_distance(a, b, kLInf) == 1.0);

  const std::vector<double> half{0.5, 0.5};
  CHECK(lk_distance(half, a, kL2) == Approx(0.7071067811865476).epsilon(1e-15));

  SECTION("zero padding") {
    const std::vector<double> shorter{1.0};
    const std::vector<double> longer{0.5, 0.0, 0.5};
    CHECK(lk_distance(shorter, longer, kL1) == Approx(1.0));
    CHECK(lk_distance(longer, shorter, kLInf) == Approx(0.5));
  }

  SECTION("higher orders") {
    const std::vector<double> z{0.0, 0.0};
    const std::vector<double> v{3.0, 4.0};
    CHECK(lk_distance(v, z, NormOrder::finite(3)) == Approx(std::cbrt(27.0 + 64.0)));
  }

  CHECK_THROWS_AS(NormOrder::finite(0), std::invalid_argument);
}

TEST_CASE("lk_distance triangle inequality", "[pmf][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> x(len(rng)), y(len(rng)), z(len(rng));
    for (auto* v : {&x, &y, &z}) {
      for (double& e : *v) e = u(rng);
    }
    for (NormOrder k : {kL1, kL2, NormOrder::finite(3), kLInf}) {
      REQUIRE(lk_distance(x, z, k) <= lk_distance(x, y, k) + lk_distance(y, z, k) + 1e-12);
    }
  }
}

TEST_CASE("cdf", "[pmf]") {
  CHECK(cdf(Pmf({1.0})).cum()[0] == 1.0);
  const Cdf c = cdf(Pmf({0.5, 0.25, 0.25}));
  CHECK(std::vector<double>(c.cum().begin(), c.cum().end()) == std::vector<double>{0.5, 0.75, 1.0});
  const Cdf d = cdf(Pmf({0.25, 0.5, 0.25}));
  CHECK(std::vector<double>(d.cum().begin(), d.cum().end()) == std::vector<double>{0.25, 0.75, 1.0});
  CHECK(d[10] == 1.0);

  CHECK_THROWS_AS(Cdf({0.5, 0.4, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Cdf({0.5, 0.9}), std::invalid_argument);
}

TEST_CASE("cdf of random pmfs is monotone and ends at one", "[pmf][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Pmf p = oracle::random_pmf(rng, 1 + trial % 40);
    const Cdf c = cdf(p);
    for (std::size_t j = 1; j < c.size(); ++j) REQUIRE(c.cum()[j - 1] <= c.cum()[j]);
    REQUIRE(std::abs(c.cum().back() - 1.0) <= 1e-10);
  }
}

TEST_CASE("sample_frequencies", "[pmf]") {
  SECTION("point mass") {
    const FrequencyVector f = sample_frequencies(Pmf({1.0}), 5, std::uint64_t{3});
    CHECK(f.counts().size() == 1);
    CHECK(f[0] == 5);
  }

  SECTION("point mass away from zero") {
    const FrequencyVector f = sample_frequencies(Pmf::point_mass(3), 9, std::uint64_t{3});
    CHECK(f.t_n() == 3);
    CHECK(f[3] == 9);
  }

  SECTION("trailing zero-mass cell is never hit") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const FrequencyVector f = sample_frequencies(Pmf({0.3, 0.7, 0.0}), 20, s);
      REQUIRE(f.t_n() <= 1);
    }
  }

  SECTION("binomial concentration") {
    // P(|X/n - 1/2| > 0.02) for X ~ Bin(10^4, 1/2) is about 6e-5; the seed is
    // fixed so this is deterministic.
    const FrequencyVector f = sample_frequencies(Pmf({0.5, 0.5}), 10000, std::uint64_t{2024});
    CHECK(std::abs(static_cast<double>(f[0]) / 10000.0 - 0.5) < 0.02);
  }

  SECTION("determinism") {
    const Pmf p({0.1, 0.2, 0.3, 0.4});
    CHECK(sample_frequencies(p, 1000, std::uint64_t{99}) == sample_frequencies(p, 1000, std::uint64_t{99}));
    CHECK_FALSE(sample_frequencies(p, 1000, std::uint64_t{99}) == sample_frequencies(p, 1000, std::uint64_t{100}));
  }

  SECTION("empirical of a sample is a valid pmf") {
    std::mt19937_64 rng(17);
    for (std::uint64_t s = 0; s < 200; ++s) {
      const Pmf p = oracle::random_pmf(rng, 1 + s % 15);
      const FrequencyVector f = sample_frequencies(p, 1 + static_cast<std::int64_t>(s % 97), s);
      REQUIRE_NOTHROW(empirical(f));
    }
  }

  CHECK_THROWS_AS(sample_frequencies(Pmf({1.0}), 0, std::uint64_t{1}), std::invalid_argument);
}

TEST_CASE("derived seeds separate streams", "[rng]") {
  CHECK(derive_seed(1, {0}) != derive_seed(1, {1}));
  CHECK(derive_seed(1, {0, 1}) != derive_seed(1, {1, 0}));
  CHECK(derive_seed(7, {3, 4}) == derive_seed(7, {3, 4}));
}
