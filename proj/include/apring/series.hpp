#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "apring/errors.hpp"
#include "apring/partition.hpp"

namespace apring {

enum class SeriesKind { Geometric, PowerLaw, Explicit };

// Absolutely summable coefficient modulus sequence |c_1|, |c_2|, ...
// Summability is certified by construction: geometric ratio < 1, power law
// exponent > 1, or a finite list.
class CoefficientSeries {
 public:
  static CoefficientSeries geometric(double first, double ratio) {
    if (!(first > 0.0) || !std::isfinite(first))
      throw SpecParseError("geometric first term must be positive");
    if (!(ratio > 0.0) || !(ratio < 1.0))
      throw SpecParseError("geometric ratio must lie in (0, 1)");
    CoefficientSeries s;
    s.kind_ = SeriesKind::Geometric;
    s.a_ = first;
    s.b_ = ratio;
    return s;
  }

  static CoefficientSeries power_law(double exponent, double scale) {
    if (!(exponent > 1.0)) throw SpecParseError("power law exponent must exceed 1");
    if (!(scale > 0.0) || !std::isfinite(scale))
      throw SpecParseError("power law scale must be positive");
    CoefficientSeries s;
    s.kind_ = SeriesKind::PowerLaw;
    s.a_ = scale;
    s.b_ = exponent;
    return s;
  }

  static CoefficientSeries explicit_list(std::vector<double> values) {
    if (values.empty()) throw SpecParseError("explicit series must be nonempty");
    for (double v : values)
      if (!(v >= 0.0) || !std::isfinite(v))
        throw SpecParseError("explicit series terms must be finite and nonnegative");
    CoefficientSeries s;
    s.kind_ = SeriesKind::Explicit;
    s.values_ = std::move(values);
    return s;
  }

  SeriesKind kind() const { return kind_; }

  // 1-based coefficient |c_k|; an explicit list is zero beyond its end.
  double coefficient(std::size_t k) const {
    switch (kind_) {
      case SeriesKind::Geometric:
        return a_ * std::pow(b_, static_cast<double>(k - 1));
      case SeriesKind::PowerLaw:
        return a_ * std::pow(static_cast<double>(k), -b_);
      case SeriesKind::Explicit:
        return k <= values_.size() ? values_[k - 1] : 0.0;
    }
    return 0.0;
  }

  struct Tail {
    double value = 0.0;       // tail sum, or bracket midpoint for power laws
    double half_width = 0.0;  // bracket half-width, zero when exact
  };

  // Sum of |c_k| for k > n. Geometric and explicit tails are closed form;
  // power-law tails report the integral bracket midpoint and half-width.
  Tail tail_after(std::size_t n) const {
    Tail t;
    switch (kind_) {
      case SeriesKind::Geometric:
        t.value = a_ * std::pow(b_, static_cast<double>(n)) / (1.0 - b_);
        break;
      case SeriesKind::PowerLaw: {
        const double p = b_;
        const double upper = a_ * std::pow(static_cast<double>(n), 1.0 - p) / (p - 1.0);
        const double lower = a_ * std::pow(static_cast<double>(n + 1), 1.0 - p) / (p - 1.0);
        t.value = 0.5 * (upper + lower);
        t.half_width = 0.5 * (upper - lower);
        break;
      }
      case SeriesKind::Explicit: {
        double s = 0.0;
        for (std::size_t k = values_.size(); k > n; --k) s += values_[k - 1];
        t.value = s;
        break;
      }
    }
    return t;
  }

  double geometric_first() const { return a_; }
  double geometric_ratio() const { return b_; }
  double power_exponent() const { return b_; }
  double power_scale() const { return a_; }
  const std::vector<double>& explicit_values() const { return values_; }

 private:
  CoefficientSeries() = default;
  SeriesKind kind_ = SeriesKind::Explicit;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<double> values_;
};

struct ConvergenceRow {
  std::size_t n = 0;
  double m_n = 0.0;
  double tail = 0.0;
  double tail_half_width = 0.0;
};

inline constexpr std::size_t kSeriesSolverCap = 40;

// Exact partition minima of the truncations n = 1..n_max together with the
// tail sums.
inline std::vector<ConvergenceRow> mn_sequence(const CoefficientSeries& s, std::size_t n_max) {
  if (n_max == 0) throw SpecParseError("n_max must be at least 1");
  if (n_max > kSeriesSolverCap) throw TooManyWeights(n_max, kSeriesSolverCap);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_max);
  WeightSet w;
  for (std::size_t n = 1; n <= n_max; ++n) {
    w.weights.push_back(s.coefficient(n));
    ConvergenceRow row;
    row.n = n;
    row.m_n = solve_partition(w).m;
    const CoefficientSeries::Tail tail = s.tail_after(n);
    row.tail = tail.value;
    row.tail_half_width = tail.half_width;
    rows.push_back(row);
  }
  return rows;
}

// Sequence-level convergence test: adding term n+1 can move the optimum by at
// most |c_{n+1}|, so consecutive minima must satisfy |m_{n+1} - m_n| <=
// |c_{n+1}| (plus rounding slack). Holds unconditionally for correct minima.
inline bool cauchy_check(const std::vector<ConvergenceRow>& rows, const CoefficientSeries& s) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double next_c = s.coefficient(rows[i + 1].n);
    if (std::fabs(rows[i + 1].m_n - rows[i].m_n) > next_c + 1e-12) return false;
  }
  return true;
}

}  // namespace apring
