#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "apring/errors.hpp"
#include "apring/parallel.hpp"
#include "apring/partition.hpp"
#include "apring/polynomial.hpp"

namespace apring {

// Formula-side annulus radii: big_m = sum of moduli, small_m = exact
// partition minimum of the moduli. Phases never enter.
struct ExtremaFormulas {
  double big_m = 0.0;
  double small_m = 0.0;
};

inline ExtremaFormulas radii_formulas(const TrigPolynomial& f) {
  ExtremaFormulas out;
  out.big_m = f.sum_moduli();
  WeightSet w;
  w.weights = f.moduli();
  out.small_m = solve_partition(w).m;
  return out;
}

struct ScanReport {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double step = 0.0;
  double min_val = 0.0;
  double argmin = 0.0;
  double max_val = 0.0;
  double argmax = 0.0;
  bool refined = false;
  std::uint64_t evaluations = 0;
};

namespace detail {

// Flat copy of the term data for tight evaluation loops.
struct ScanEvaluator {
  std::vector<double> modulus, lambda, phase;

  explicit ScanEvaluator(const TrigPolynomial& f) {
    for (const Term& t : f.terms()) {
      modulus.push_back(t.modulus);
      lambda.push_back(t.frequency.numeric_value());
      phase.push_back(t.phase);
    }
  }

  double abs2(double x) const {
    double a = 0.0, b = 0.0;
    for (std::size_t k = 0; k < modulus.size(); ++k) {
      const double arg = lambda[k] * x + phase[k];
      a += modulus[k] * std::cos(arg);
      b += modulus[k] * std::sin(arg);
    }
    return a * a + b * b;
  }

  Abs2Jet jet(double x) const {
    double a = 0.0, b = 0.0, da = 0.0, db = 0.0, dda = 0.0, ddb = 0.0;
    for (std::size_t k = 0; k < modulus.size(); ++k) {
      const double arg = lambda[k] * x + phase[k];
      const double c = std::cos(arg);
      const double s = std::sin(arg);
      const double mc = modulus[k] * c;
      const double ms = modulus[k] * s;
      a += mc;
      b += ms;
      da -= lambda[k] * ms;
      db += lambda[k] * mc;
      dda -= lambda[k] * lambda[k] * mc;
      ddb -= lambda[k] * lambda[k] * ms;
    }
    Abs2Jet jet;
    jet.g = a * a + b * b;
    jet.dg = 2.0 * (a * da + b * db);
    jet.ddg = 2.0 * (da * da + a * dda + db * db + b * ddb);
    return jet;
  }
};

struct GridCandidate {
  std::int64_t index;
  bool is_min;  // local minimum vs local maximum
};

// A refinement target: one lattice cell and the extremum kind sought in it.
struct RefineCell {
  std::int64_t cell;
  bool is_min;

  bool operator<(const RefineCell& o) const {
    return cell < o.cell || (cell == o.cell && is_min < o.is_min);
  }
  bool operator==(const RefineCell& o) const = default;
};

struct RefineOutcome {
  bool valid = false;
  double x = 0.0;
  double g = 0.0;
  std::uint64_t evals = 0;
};

// Converged refinement points are snapped to the absolute dyadic lattice
// k * 2^-26 before the final evaluation. Any two procedures that locate the
// same extremum to ~1e-11 then evaluate the very same double, so their
// reported values cannot disagree by stray ulps. The value cost of snapping,
// 0.5 * g'' * 2^-54, is far below every reported tolerance.
inline double snap_to_dyadic(double x) {
  const double scaled = std::ldexp(x, 26);
  if (std::fabs(scaled) >= 9.007199254740992e15) return x;
  return std::ldexp(std::nearbyint(scaled), -26);
}

// Refinement works on the absolute lattice of cells [j*delta0, (j+1)*delta0]
// with delta0 = pi/(8*lambda_max). Every grid extremum candidate selects the
// five cells around it; each cell is then refined by a procedure that depends
// on the cell alone, never on the grid step or the window. Two scans that
// detect the same extremum therefore refine the same cell to a bit-identical
// value, which keeps min_val monotone under window growth and step halving.
// A grid local-minimum pattern at step h <= 2*delta0 pins a true minimum
// inside (x_c - h, x_c + h), so the five-cell neighbourhood contains its
// derivative sign change; cells without one add nothing the grid does not
// already cover and are skipped.
inline RefineOutcome refine_cell(const ScanEvaluator& ev, std::int64_t cell, double delta0,
                                 bool is_min) {
  const double sigma = is_min ? 1.0 : -1.0;
  RefineOutcome out;
  const double a0 = static_cast<double>(cell) * delta0;
  const double b0 = static_cast<double>(cell + 1) * delta0;
  const double da = sigma * ev.jet(a0).dg;
  const double db = sigma * ev.jet(b0).dg;
  out.evals += 2;

  if (da == 0.0 || db == 0.0) {
    out.x = da == 0.0 ? a0 : b0;
    out.g = ev.abs2(out.x);
    out.valid = true;
    ++out.evals;
    return out;
  }
  if (!(da < 0.0 && db > 0.0)) return out;  // no extremum of this kind here

  // Newton on d|f|^2/dx from the cell midpoint, safeguarded by bisection
  // (64 iterations, 1e-12 relative step tolerance).
  double a = a0, b = b0;
  double x = 0.5 * (a + b);
  for (int it = 0; it < 64; ++it) {
    ++out.evals;
    const Abs2Jet jet = ev.jet(x);
    const double dg = sigma * jet.dg;
    const double ddg = sigma * jet.ddg;
    if (dg < 0.0)
      a = x;
    else if (dg > 0.0)
      b = x;
    else
      break;
    double x_next;
    if (ddg > 0.0) {
      x_next = x - dg / ddg;
      if (!(x_next > a && x_next < b)) x_next = 0.5 * (a + b);
    } else {
      x_next = 0.5 * (a + b);
    }
    const double dx = std::fabs(x_next - x);
    x = x_next;
    if (dx <= 1e-12 * std::max(1.0, std::fabs(x))) break;
  }
  const double snapped = snap_to_dyadic(x);
  if (snapped > a0 && snapped < b0) x = snapped;
  ++out.evals;
  out.x = x;
  out.g = ev.abs2(x);
  out.valid = true;
  return out;
}

// Golden-section over a fixed interval; used for the sub-cell slivers between
// the window edges and the first/last full lattice cell. The interval depends
// only on the window bounds and the lattice, never on the grid step.
inline RefineOutcome golden_on_interval(const ScanEvaluator& ev, double lo, double hi,
                                        bool is_min) {
  const double sigma = is_min ? 1.0 : -1.0;
  const double lo_bound = lo;
  const double hi_bound = hi;
  RefineOutcome out;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - (hi - lo) * inv_phi;
  double d = lo + (hi - lo) * inv_phi;
  double fc = sigma * ev.abs2(c);
  double fd = sigma * ev.abs2(d);
  out.evals += 2;
  for (int it = 0; it < 64 && hi - lo > 1e-12 * std::max(1.0, std::fabs(hi)); ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * inv_phi;
      fc = sigma * ev.abs2(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * inv_phi;
      fd = sigma * ev.abs2(d);
    }
    ++out.evals;
  }
  double x = 0.5 * (lo + hi);
  const double snapped = snap_to_dyadic(x);
  if (snapped > lo_bound && snapped < hi_bound) x = snapped;
  out.x = x;
  out.g = ev.abs2(out.x);
  out.valid = true;
  ++out.evals;
  return out;
}

}  // namespace detail

// Grid scan of |f| over [x_lo, x_hi] with optional local refinement of every
// interior grid extremum. min_val is an upper bound for the window infimum
// and max_val a lower bound for the supremum; both are actual |f| values at
// points inside the window. The grid is chunked at fixed boundaries and
// merged in chunk order, so reports are bit-identical for any thread count.
inline ScanReport scan_extrema(const TrigPolynomial& f, double x_lo, double x_hi, double step,
                               bool refine) {
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !(x_lo < x_hi)) throw EmptyWindow();
  if (!(step > 0.0) || !std::isfinite(step)) throw StepTooCoarse(step, 0.0);
  const double lambda_max = f.max_abs_frequency();
  if (lambda_max > 0.0) {
    const double guard = std::numbers::pi / (4.0 * lambda_max);
    if (step > guard * (1.0 + 1e-12)) throw StepTooCoarse(step, guard);
  }

  std::int64_t i_max = static_cast<std::int64_t>(std::floor((x_hi - x_lo) / step));
  while (x_lo + static_cast<double>(i_max) * step > x_hi) --i_max;
  while (x_lo + static_cast<double>(i_max + 1) * step <= x_hi) ++i_max;
  const std::int64_t points = i_max + 1;

  const detail::ScanEvaluator ev(f);
  auto grid_g = [&](std::int64_t i) { return ev.abs2(x_lo + static_cast<double>(i) * step); };

  constexpr std::int64_t kChunk = 1 << 16;
  const std::size_t chunks = static_cast<std::size_t>((points + kChunk - 1) / kChunk);

  struct ChunkStats {
    double min_g = std::numeric_limits<double>::infinity();
    std::int64_t argmin = 0;
    double max_g = -std::numeric_limits<double>::infinity();
    std::int64_t argmax = 0;
    std::uint64_t evals = 0;
    std::vector<detail::GridCandidate> candidates;
  };
  std::vector<ChunkStats> stats(chunks);

  parallel_chunks(chunks, [&](std::size_t c) {
    ChunkStats& st = stats[c];
    const std::int64_t begin = static_cast<std::int64_t>(c) * kChunk;
    const std::int64_t end = std::min<std::int64_t>(begin + kChunk, points);
    // Own the extremum tests centred at j in [begin, end); they need values
    // at j-1 and j+1, so evaluate the halo points as well.
    const std::int64_t lo_eval = std::max<std::int64_t>(begin - 1, 0);
    const std::int64_t hi_eval = std::min<std::int64_t>(end, i_max);
    double g2 = 0.0, g1 = 0.0;
    for (std::int64_t i = lo_eval; i <= hi_eval; ++i) {
      const double g = grid_g(i);
      ++st.evals;
      if (i >= begin && i < end) {
        if (g < st.min_g) {
          st.min_g = g;
          st.argmin = i;
        }
        if (g > st.max_g) {
          st.max_g = g;
          st.argmax = i;
        }
      }
      if (i >= lo_eval + 2) {
        const std::int64_t j = i - 1;
        if (j >= begin && j < end && j >= 1 && j <= i_max - 1) {
          if (g1 < g2 && g1 <= g) st.candidates.push_back({j, true});
          if (g1 > g2 && g1 >= g) st.candidates.push_back({j, false});
        }
      }
      g2 = g1;
      g1 = g;
    }
  });

  ScanReport report;
  report.x_lo = x_lo;
  report.x_hi = x_hi;
  report.step = step;
  report.refined = refine;

  double min_g = std::numeric_limits<double>::infinity();
  double max_g = -std::numeric_limits<double>::infinity();
  std::int64_t argmin_i = 0, argmax_i = 0;
  std::uint64_t evals = 0;
  std::vector<detail::GridCandidate> candidates;
  for (const ChunkStats& st : stats) {
    if (st.min_g < min_g) {
      min_g = st.min_g;
      argmin_i = st.argmin;
    }
    if (st.max_g > max_g) {
      max_g = st.max_g;
      argmax_i = st.argmax;
    }
    evals += st.evals;
    candidates.insert(candidates.end(), st.candidates.begin(), st.candidates.end());
  }

  double best_min_g = min_g;
  double best_min_x = x_lo + static_cast<double>(argmin_i) * step;
  double best_max_g = max_g;
  double best_max_x = x_lo + static_cast<double>(argmax_i) * step;

  if (refine && lambda_max > 0.0 && !candidates.empty()) {
    const double delta0 = std::numbers::pi / (8.0 * lambda_max);

    // Map candidates onto interior lattice cells and dedupe.
    std::vector<detail::RefineCell> cells;
    cells.reserve(candidates.size() * 5);
    for (const detail::GridCandidate& cand : candidates) {
      const double x_c = x_lo + static_cast<double>(cand.index) * step;
      const std::int64_t j0 = static_cast<std::int64_t>(std::floor(x_c / delta0));
      for (std::int64_t off = -2; off <= 2; ++off) {
        const std::int64_t j = j0 + off;
        const double a = static_cast<double>(j) * delta0;
        const double b = static_cast<double>(j + 1) * delta0;
        if (a >= x_lo && b <= x_hi) cells.push_back({j, cand.is_min});
      }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::vector<detail::RefineOutcome> outcomes(cells.size());
    constexpr std::size_t kRefineChunk = 256;
    const std::size_t rchunks = (cells.size() + kRefineChunk - 1) / kRefineChunk;
    parallel_chunks(rchunks, [&](std::size_t rc) {
      const std::size_t begin = rc * kRefineChunk;
      const std::size_t end = std::min(begin + kRefineChunk, cells.size());
      for (std::size_t k = begin; k < end; ++k)
        outcomes[k] = detail::refine_cell(ev, cells[k].cell, delta0, cells[k].is_min);
    });
    for (std::size_t k = 0; k < cells.size(); ++k) {
      evals += outcomes[k].evals;
      if (!outcomes[k].valid) continue;
      // refined points stay inside their interior cell, hence in the window
      if (cells[k].is_min) {
        if (outcomes[k].g < best_min_g) {
          best_min_g = outcomes[k].g;
          best_min_x = outcomes[k].x;
        }
      } else if (outcomes[k].g > best_max_g) {
        best_max_g = outcomes[k].g;
        best_max_x = outcomes[k].x;
      }
    }

    // Extrema clipped by the window edges live in the sub-cell slivers
    // outside the first/last full lattice cell.
    const double first_lattice = std::ceil(x_lo / delta0) * delta0;
    const double last_lattice = std::floor(x_hi / delta0) * delta0;
    std::vector<std::pair<double, double>> slivers;
    if (first_lattice > x_lo) slivers.emplace_back(x_lo, std::min(first_lattice, x_hi));
    if (last_lattice < x_hi) slivers.emplace_back(std::max(last_lattice, x_lo), x_hi);
    for (const auto& [lo, hi] : slivers) {
      if (!(lo < hi)) continue;
      const detail::RefineOutcome mn = detail::golden_on_interval(ev, lo, hi, true);
      const detail::RefineOutcome mx = detail::golden_on_interval(ev, lo, hi, false);
      evals += mn.evals + mx.evals;
      if (mn.g < best_min_g) {
        best_min_g = mn.g;
        best_min_x = mn.x;
      }
      if (mx.g > best_max_g) {
        best_max_g = mx.g;
        best_max_x = mx.x;
      }
    }
  }

  report.min_val = std::sqrt(std::max(0.0, best_min_g));
  report.argmin = best_min_x;
  report.max_val = std::sqrt(std::max(0.0, best_max_g));
  report.argmax = best_max_x;
  report.evaluations = evals;
  return report;
}

// Running minima over the nested windows [0, T] for each T in the schedule.
// Each entry is the cumulative best upper bound, so the list never increases.
inline std::vector<std::pair<double, double>> running_min_series(
    const TrigPolynomial& f, const std::vector<double>& window_schedule, double step) {
  if (window_schedule.empty()) throw SpecParseError("window schedule must be nonempty");
  for (std::size_t i = 0; i < window_schedule.size(); ++i) {
    if (!(window_schedule[i] > 0.0)) throw SpecParseError("schedule entries must be positive");
    if (i > 0 && !(window_schedule[i] > window_schedule[i - 1]))
      throw SpecParseError("schedule must be strictly increasing");
  }
  std::vector<std::pair<double, double>> rows;
  double best = std::numeric_limits<double>::infinity();
  for (double t : window_schedule) {
    const ScanReport r = scan_extrema(f, 0.0, t, step, true);
    best = std::min(best, r.min_val);
    rows.emplace_back(t, best);
  }
  return rows;
}

}  // namespace apring
