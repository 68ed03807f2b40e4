#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "apring/polynomial.hpp"
#include "apring/presets.hpp"
#include "test_support.hpp"

using namespace apring;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("components at simple points") {
  const ComponentPair p0 = components(example_pair_sqrt2(), 0.0);
  CHECK(p0.a == 2.0);
  CHECK(p0.b == 0.0);

  const ComponentPair p1 = components(example_periodic_pair(2.0), kPi);
  CHECK(p1.a == Catch::Approx(1.0).margin(1e-15));
  CHECK(p1.b == Catch::Approx(0.0).margin(1e-15));

  const ComponentPair p2 = components(example_pair_sqrt2_half(), 0.0);
  CHECK(p2.a == 1.5);
  CHECK(p2.b == 0.0);
}

TEST_CASE("evaluate_abs2 closed-form points") {
  const TrigPolynomial f = example_periodic_pair(2.0);
  CHECK(evaluate_abs2(f, kPi) == Catch::Approx(1.0).margin(1e-12));
  CHECK(evaluate_abs2(f, 0.0) == 9.0);

  // |f|^2 = 2 + 2 cos((sqrt2 - 1) x) vanishes at x = pi / (sqrt2 - 1)
  const double x0 = kPi / (std::sqrt(2.0) - 1.0);
  CHECK(evaluate_abs2(example_pair_sqrt2(), x0) <= 1e-18);
}

TEST_CASE("evaluate_abs2 matches the periodic closed form on a grid") {
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    const TrigPolynomial f = example_periodic_pair(a);
    const double tol = 1e-12 * (1.0 + a) * (1.0 + a);
    for (int i = 0; i < 1000; ++i) {
      const double x = 2.0 * kPi * static_cast<double>(i) / 999.0;
      const double expect = 1.0 + a * a + 2.0 * a * std::cos(x);
      REQUIRE(std::fabs(evaluate_abs2(f, x) - expect) <= tol);
    }
  }
}

TEST_CASE("abs2_derivative closed-form points") {
  // all phases zero: a'(0) = 0 and b(0) = 0, so the derivative vanishes
  CHECK(abs2_derivative(example_pair_sqrt2(), 0.0) == 0.0);
  CHECK(abs2_derivative(example_five_sqrt(1.0), 0.0) == 0.0);

  // d/dx (5 + 4 cos x) = -4 sin x
  CHECK(abs2_derivative(example_periodic_pair(2.0), kPi / 2.0) ==
        Catch::Approx(-4.0).margin(1e-12));
}

TEST_CASE("abs2_derivative matches central finite differences") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> x_dist(-100.0, 100.0);
  const double h = 1e-6;
  int accepted = 0;
  while (accepted < 1000) {
    const TrigPolynomial f = test_support::random_polynomial(rng);
    const double x = x_dist(rng);
    const double fd = (evaluate_abs2(f, x + h) - evaluate_abs2(f, x - h)) / (2.0 * h);
    if (std::fabs(fd) < 0.1) continue;  // below the finite-difference noise floor
    const double d = abs2_derivative(f, x);
    REQUIRE(std::fabs(d - fd) <= 1e-4 * std::fabs(fd));
    ++accepted;
  }
}

TEST_CASE("evaluate_abs2 is nonnegative and consistent with components") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> x_dist(-50.0, 50.0);
  for (int it = 0; it < 500; ++it) {
    const TrigPolynomial f = test_support::random_polynomial(rng);
    const double x = x_dist(rng);
    const ComponentPair p = components(f, x);
    const double g = evaluate_abs2(f, x);
    REQUIRE(g >= 0.0);
    REQUIRE(g == p.a * p.a + p.b * p.b);
  }
}

TEST_CASE("polynomial validation") {
  CHECK_THROWS_AS(TrigPolynomial({}), SpecParseError);
  CHECK_THROWS_AS(TrigPolynomial({{-1.0, 0.0, Frequency::real(1.0)}}), SpecParseError);
  CHECK_THROWS_AS(TrigPolynomial({{1.0, std::nan(""), Frequency::real(1.0)}}), SpecParseError);
}
