#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "apring/errors.hpp"
#include "apring/format.hpp"
#include "apring/polynomial.hpp"

namespace apring {

struct CurveMeta {
  std::string source;  // textual description of the polynomial
  double t_max = 0.0;
  double step = 0.0;
  double radius_bound = 0.0;  // sum of moduli
};

// Parametric samples (t, Re f(t), Im f(t)), ordered by t.
struct CurveSamples {
  std::vector<std::array<double, 3>> rows;
  CurveMeta meta;
};

// Samples t = 0, step, 2*step, ... <= t_max. The scan-grid step guard
// applies: step <= pi / (4 * lambda_max).
inline CurveSamples sample_curve(const TrigPolynomial& f, double t_max, double step,
                                 std::string source = {}) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw SpecParseError("t_max must be positive and finite");
  if (!(step > 0.0) || !std::isfinite(step)) throw StepTooCoarse(step, 0.0);
  const double lambda_max = f.max_abs_frequency();
  if (lambda_max > 0.0) {
    const double guard = std::numbers::pi / (4.0 * lambda_max);
    if (step > guard * (1.0 + 1e-12)) throw StepTooCoarse(step, guard);
  }

  CurveSamples out;
  out.meta.source = std::move(source);
  out.meta.t_max = t_max;
  out.meta.step = step;
  out.meta.radius_bound = f.sum_moduli();
  for (std::int64_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t > t_max) break;
    const ComponentPair p = components(f, t);
    out.rows.push_back({t, p.a, p.b});
  }
  return out;
}

inline void emit_csv(const CurveSamples& c, std::ostream& os) {
  os << "t,x,y\n";
  for (const auto& row : c.rows) {
    os << format_double(row[0]) << ',' << format_double(row[1]) << ','
       << format_double(row[2]) << '\n';
  }
  if (!os) throw IoError("csv write failed");
}

inline void emit_csv(const CurveSamples& c, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string());
  emit_csv(c, os);
}

// Single-polyline SVG with viewBox [-R-0.1, -R-0.1, 2R+0.2, 2R+0.2] where R
// is the modulus sum; the y axis is flipped for screen orientation. Output is
// byte-deterministic for identical inputs.
inline void emit_svg(const CurveSamples& c, std::ostream& os, double stroke_width = 0.01) {
  if (c.rows.size() < 2) throw TooFewSamples(c.rows.size());
  const double r = c.meta.radius_bound;
  const double corner = -(r + 0.1);
  const double extent = 2.0 * r + 0.2;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(corner) << ' '
     << format_double(corner) << ' ' << format_double(extent) << ' ' << format_double(extent)
     << "\">\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\""
     << format_double(stroke_width) << "\" points=\"";
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    if (i) os << ' ';
    os << format_double(c.rows[i][1]) << ',' << format_double(-c.rows[i][2]);
  }
  os << "\"/>\n</svg>\n";
  if (!os) throw IoError("svg write failed");
}

inline void emit_svg(const CurveSamples& c, const std::filesystem::path& path,
                     double stroke_width = 0.01) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string());
  emit_svg(c, os, stroke_width);
}

}  // namespace apring
