#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "apring/coverage.hpp"
#include "apring/presets.hpp"

using namespace apring;

TEST_CASE("independent pair fills the annulus") {
  // desk-scale version of the acceptance run (full run: T=1e4, 1e6 samples)
  const CoverageReport r = ring_coverage(example_pair_sqrt2_half(), 1e4, 200000, 10, 24);
  CHECK(r.fraction_covered >= 0.95);
  CHECK(r.observed_min_abs >= 0.5 - 1e-9);
  CHECK(r.observed_max_abs <= 1.5 + 1e-9);
}

TEST_CASE("periodic pair touches the outer radius") {
  const CoverageReport r =
      ring_coverage(example_periodic_pair(2.0), 2.0 * std::numbers::pi, 100000, 10, 24);
  CHECK(std::fabs(r.observed_max_abs - 3.0) <= 1e-6);
  CHECK(r.observed_max_abs <= 3.0 + 1e-9);
  // a periodic orbit covers only a curve, not the full annulus
  CHECK(r.fraction_covered < 0.9);
}

TEST_CASE("single-sample edge case") {
  const CoverageReport r = ring_coverage(example_pair_sqrt2(), 0.0, 1, 1, 1);
  CHECK(r.observed_min_abs == r.observed_max_abs);
  CHECK(r.observed_min_abs == 2.0);  // |f(0)| = 2 exactly
}

TEST_CASE("observed maximum never exceeds the modulus sum") {
  const CoverageReport r = ring_coverage(example_five_sqrt(1.0), 500.0, 50000, 5, 8);
  CHECK(r.observed_max_abs <= 32.0 + 1e-9);
  CHECK(r.observed_min_abs >= 0.0);
}

TEST_CASE("degenerate annulus of a single term") {
  const TrigPolynomial f({{2.5, 0.3, Frequency::sqrt_integer(2)}});
  const CoverageReport r = ring_coverage(f, 100.0, 1000, 1, 8);
  CHECK(r.observed_min_abs == Catch::Approx(2.5).margin(1e-12));
  CHECK(r.observed_max_abs == Catch::Approx(2.5).margin(1e-12));
  CHECK(r.fraction_covered > 0.9);  // all 8 angular bins of the circle
}

TEST_CASE("coverage validation") {
  CHECK_THROWS_AS(ring_coverage(example_pair_sqrt2(), 10.0, 5, 10, 24), SpecParseError);
  CHECK_THROWS_AS(ring_coverage(example_pair_sqrt2(), 10.0, 100, 0, 24), SpecParseError);
}
