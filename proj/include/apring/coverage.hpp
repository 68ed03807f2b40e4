#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "apring/errors.hpp"
#include "apring/extrema.hpp"
#include "apring/polynomial.hpp"

namespace apring {

struct CoverageReport {
  std::size_t radial_bins = 0;
  std::size_t angular_bins = 0;
  double fraction_covered = 0.0;  // annulus bins hit / total annulus bins
  double observed_min_abs = 0.0;
  double observed_max_abs = 0.0;
};

// Samples f at equispaced points of [0, T] and bins the values over the
// annulus small_m <= |z| <= big_m given by the formula radii. Values outside
// the annulus are recorded in the observed extremes but not binned; dependent
// frequency sets may legitimately dip below small_m.
inline CoverageReport ring_coverage(const TrigPolynomial& f, double window, std::size_t samples,
                                    std::size_t radial_bins, std::size_t angular_bins) {
  if (radial_bins == 0 || angular_bins == 0)
    throw SpecParseError("coverage needs at least one bin per axis");
  if (samples < radial_bins * angular_bins)
    throw SpecParseError("coverage needs at least one sample per bin");
  if (!(window >= 0.0) || !std::isfinite(window))
    throw SpecParseError("coverage window must be finite and nonnegative");

  const ExtremaFormulas radii = radii_formulas(f);
  const double r = radii.small_m;
  const double span = radii.big_m - r;

  std::vector<std::uint8_t> hit(radial_bins * angular_bins, 0);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = -std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < samples; ++i) {
    const double x = samples == 1
                         ? 0.0
                         : window * (static_cast<double>(i) / static_cast<double>(samples - 1));
    const ComponentPair z = components(f, x);
    const double rad = std::sqrt(z.a * z.a + z.b * z.b);
    min_abs = std::min(min_abs, rad);
    max_abs = std::max(max_abs, rad);

    std::size_t ri;
    if (span <= 1e-15 * std::max(1.0, radii.big_m)) {
      if (std::fabs(rad - r) > 1e-9 * (1.0 + radii.big_m)) continue;
      ri = 0;
    } else {
      const double u = (rad - r) / span;
      if (u < -1e-12 || u > 1.0 + 1e-12) continue;
      const double scaled = u * static_cast<double>(radial_bins);
      ri = static_cast<std::size_t>(std::min<double>(
          std::max(0.0, std::floor(scaled)), static_cast<double>(radial_bins - 1)));
    }
    const double theta = std::atan2(z.b, z.a);  // [-pi, pi]
    const double frac = (theta + std::numbers::pi) / (2.0 * std::numbers::pi);
    std::size_t ai = static_cast<std::size_t>(std::floor(frac * static_cast<double>(angular_bins)));
    if (ai >= angular_bins) ai = angular_bins - 1;
    hit[ri * angular_bins + ai] = 1;
  }

  std::size_t covered = 0;
  for (std::uint8_t h : hit) covered += h;

  CoverageReport report;
  report.radial_bins = radial_bins;
  report.angular_bins = angular_bins;
  report.fraction_covered =
      static_cast<double>(covered) / static_cast<double>(radial_bins * angular_bins);
  report.observed_min_abs = min_abs;
  report.observed_max_abs = max_abs;
  return report;
}

}  // namespace apring
