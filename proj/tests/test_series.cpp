#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "apring/partition.hpp"
#include "apring/series.hpp"
#include "test_support.hpp"

using namespace apring;

TEST_CASE("series constructors certify summability") {
  CHECK_NOTHROW(CoefficientSeries::geometric(0.5, 0.5));
  CHECK_THROWS_AS(CoefficientSeries::geometric(0.5, 1.0), SpecParseError);
  CHECK_THROWS_AS(CoefficientSeries::geometric(0.0, 0.5), SpecParseError);
  CHECK_NOTHROW(CoefficientSeries::power_law(2.0, 1.0));
  CHECK_THROWS_AS(CoefficientSeries::power_law(1.0, 1.0), SpecParseError);
  CHECK_THROWS_AS(CoefficientSeries::explicit_list({1.0, -1.0}), SpecParseError);
  CHECK_THROWS_AS(CoefficientSeries::explicit_list({}), SpecParseError);
}

TEST_CASE("halving geometric series has m_n = 2^-n") {
  const CoefficientSeries s = CoefficientSeries::geometric(0.5, 0.5);
  const auto rows = mn_sequence(s, 20);
  REQUIRE(rows.size() == 20);
  for (const ConvergenceRow& row : rows) {
    REQUIRE(row.m_n == std::ldexp(1.0, -static_cast<int>(row.n)));
    // brute-force cross-check on the same prefix
    WeightSet w;
    for (std::size_t k = 1; k <= row.n; ++k) w.weights.push_back(s.coefficient(k));
    REQUIRE(exact_bruteforce(w).m == row.m_n);
    // geometric tails are closed form: a * r^n / (1 - r) = 2^-n
    REQUIRE(std::fabs(row.tail - std::ldexp(1.0, -static_cast<int>(row.n))) <=
            1e-15 * row.tail);
    REQUIRE(row.tail_half_width == 0.0);
  }
  CHECK(cauchy_check(rows, s));
}

TEST_CASE("explicit series reproduce the five-number fixture") {
  const CoefficientSeries s = CoefficientSeries::explicit_list({5, 5, 6, 7, 9});
  const auto rows = mn_sequence(s, 5);
  // brute-force oracle: minima of the prefixes are 5, 0, 4, 1, 0
  const double expect_m[] = {5, 0, 4, 1, 0};
  const double expect_tail[] = {27, 22, 16, 9, 0};
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE(rows[i].m_n == expect_m[i]);
    REQUIRE(rows[i].tail == expect_tail[i]);
  }
  CHECK(cauchy_check(rows, s));

  const auto one = mn_sequence(CoefficientSeries::explicit_list({1.0}), 1);
  CHECK(one.size() == 1);
  CHECK(one[0].m_n == 1.0);
  CHECK(one[0].tail == 0.0);
  CHECK(cauchy_check(one, CoefficientSeries::explicit_list({1.0})));
}

TEST_CASE("power-law tails report integral brackets") {
  const CoefficientSeries s = CoefficientSeries::power_law(2.0, 1.0);
  const auto rows = mn_sequence(s, 10);
  for (const ConvergenceRow& row : rows) {
    // true tail sum(1/k^2, k > n) lies inside [1/(n+1), 1/n]
    const double lower = 1.0 / static_cast<double>(row.n + 1);
    const double upper = 1.0 / static_cast<double>(row.n);
    REQUIRE(row.tail_half_width > 0.0);
    REQUIRE(row.tail - row.tail_half_width <= lower + 1e-15);
    REQUIRE(row.tail + row.tail_half_width >= upper - 1e-15);
  }
  // tails decrease towards zero
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) REQUIRE(rows[i + 1].tail < rows[i].tail);
}

TEST_CASE("one-term perturbation bound over random explicit series") {
  std::mt19937 rng(1357);
  std::uniform_int_distribution<std::size_t> n_dist(2, 15);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = n_dist(rng);
    const CoefficientSeries s =
        CoefficientSeries::explicit_list(test_support::random_weights(rng, n, 0.0, 5.0));
    const auto rows = mn_sequence(s, n);
    REQUIRE(cauchy_check(rows, s));
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const double step = std::fabs(rows[i + 1].m_n - rows[i].m_n);
      REQUIRE(step <= s.coefficient(rows[i + 1].n) + 1e-12);
      // two-sided form of the same bound
      REQUIRE(rows[i + 1].m_n <= rows[i].m_n + s.coefficient(rows[i + 1].n) + 1e-12);
      REQUIRE(rows[i + 1].m_n >= rows[i].m_n - s.coefficient(rows[i + 1].n) - 1e-12);
    }
  }
}

TEST_CASE("cauchy_check flags inconsistent rows") {
  const CoefficientSeries s = CoefficientSeries::explicit_list({1.0, 0.125});
  auto rows = mn_sequence(s, 2);
  CHECK(cauchy_check(rows, s));
  rows[1].m_n = 0.0;  // jump of 1 against a next coefficient of 0.125
  CHECK_FALSE(cauchy_check(rows, s));
  CHECK(cauchy_check({rows[0]}, s));  // single row is vacuous
}

TEST_CASE("sequence caps") {
  CHECK_THROWS_AS(mn_sequence(CoefficientSeries::geometric(0.5, 0.5), 0), SpecParseError);
  CHECK_THROWS_AS(mn_sequence(CoefficientSeries::geometric(0.5, 0.5), 41), TooManyWeights);
}
