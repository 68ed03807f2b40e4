#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "apring/errors.hpp"
#include "apring/extrema.hpp"
#include "apring/frequency.hpp"
#include "apring/partition.hpp"
#include "apring/polynomial.hpp"

namespace apring {

// Simultaneous phase-alignment query: find tau in [0, T] with
// |lambda_k * tau - theta_k| < delta (mod 2pi) for every k.
struct KroneckerQuery {
  std::vector<Frequency> frequencies;
  std::vector<double> targets;  // radians
  double delta = 0.0;
  double window = 0.0;  // search window [0, window]
};

namespace detail {

// distance of angle a to 0 on the circle, in [0, pi]
inline double circular_distance(double a) {
  return std::fabs(std::remainder(a, 2.0 * std::numbers::pi));
}

}  // namespace detail

inline bool kronecker_satisfied(const KroneckerQuery& q, double tau) {
  for (std::size_t k = 0; k < q.frequencies.size(); ++k) {
    const double lambda = q.frequencies[k].numeric_value();
    if (detail::circular_distance(lambda * tau - q.targets[k]) >= q.delta) return false;
  }
  return true;
}

inline double kronecker_max_distance(const KroneckerQuery& q, double tau) {
  double worst = 0.0;
  for (std::size_t k = 0; k < q.frequencies.size(); ++k) {
    const double lambda = q.frequencies[k].numeric_value();
    worst = std::max(worst, detail::circular_distance(lambda * tau - q.targets[k]));
  }
  return worst;
}

// Walk the grid i * delta/(4*lambda_max) upward until every phase condition
// holds, then polish that grid point with one golden-section pass on the
// worst circular distance. Absence of a qualifying point is a value.
inline std::optional<double> kronecker_search(const KroneckerQuery& q) {
  if (q.frequencies.empty() || q.frequencies.size() != q.targets.size())
    throw SpecParseError("kronecker query needs matching frequency and target lists");
  if (!(q.delta > 0.0) || q.delta > std::numbers::pi)
    throw SpecParseError("kronecker delta must lie in (0, pi]");
  if (!(q.window >= 0.0) || !std::isfinite(q.window))
    throw SpecParseError("kronecker window must be finite and nonnegative");

  double lambda_max = 0.0;
  for (const Frequency& f : q.frequencies)
    lambda_max = std::max(lambda_max, std::fabs(f.numeric_value()));
  if (lambda_max == 0.0) {
    // constant phases: tau is irrelevant, test the origin
    return kronecker_satisfied(q, 0.0) ? std::optional<double>(0.0) : std::nullopt;
  }

  const double step = q.delta / (4.0 * lambda_max);
  const std::int64_t count = static_cast<std::int64_t>(std::floor(q.window / step)) + 1;
  std::optional<double> grid_hit;
  for (std::int64_t i = 0; i < count; ++i) {
    const double tau = static_cast<double>(i) * step;
    if (tau > q.window) break;
    if (kronecker_satisfied(q, tau)) {
      grid_hit = tau;
      break;
    }
  }
  if (!grid_hit) return std::nullopt;

  // one refinement pass on max_k circular distance
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, *grid_hit - step);
  double hi = std::min(q.window, *grid_hit + step);
  double c = hi - (hi - lo) * inv_phi;
  double d = lo + (hi - lo) * inv_phi;
  double fc = kronecker_max_distance(q, c);
  double fd = kronecker_max_distance(q, d);
  for (int it = 0; it < 48; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * inv_phi;
      fc = kronecker_max_distance(q, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * inv_phi;
      fd = kronecker_max_distance(q, d);
    }
  }
  const double polished = 0.5 * (lo + hi);
  if (kronecker_max_distance(q, polished) < kronecker_max_distance(q, *grid_hit))
    return polished;
  return grid_hit;
}

struct CertifiedBound {
  double x = 0.0;
  double bound = 0.0;
};

// Constructive upper bound for inf |f|: take optimal signs from the exact
// partition solver, aim each phase at 0 (sign +1) or pi (sign -1), and search
// for an aligning tau. When one exists, |f(tau)| <= small_m + big_m * delta
// by the triangle inequality.
inline std::optional<CertifiedBound> certified_upper_bound(const TrigPolynomial& f, double delta,
                                                           double window) {
  WeightSet w;
  w.weights = f.moduli();
  const PartitionResult part = solve_partition(w);

  KroneckerQuery q;
  q.frequencies = f.frequencies();
  q.delta = delta;
  q.window = window;
  q.targets.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double phi = f.terms()[k].phase;
    q.targets.push_back(part.signs.signs[k] > 0 ? -phi : std::numbers::pi - phi);
  }

  const std::optional<double> tau = kronecker_search(q);
  if (!tau) return std::nullopt;
  CertifiedBound out;
  out.x = *tau;
  out.bound = std::sqrt(evaluate_abs2(f, *tau));
  return out;
}

}  // namespace apring
