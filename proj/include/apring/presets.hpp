#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "apring/errors.hpp"
#include "apring/polynomial.hpp"
#include "apring/rational.hpp"

namespace apring {

// Bundled example polynomials, addressable from the CLI by key.
//
//   "2.8"   e^{ix} + e^{i sqrt2 x}                 independent pair
//   "2.9"   e^{ix} + (1/2) e^{i sqrt2 x}           independent pair
//   "2.16"  e^{ix} + a e^{2ix}                     periodic pair (a > 0)
//   "2.19"  e^{ix} + e^{2ix} + (1/10) e^{i sqrt3 x} dependent triple
//   "3.9"   5,5,6,7,9 against a*sqrt{1,2,3,5,7}    independent five
inline TrigPolynomial example_pair_sqrt2() {
  return TrigPolynomial({{1.0, 0.0, Frequency::sqrt_integer(1)},
                         {1.0, 0.0, Frequency::sqrt_integer(2)}});
}

inline TrigPolynomial example_pair_sqrt2_half() {
  return TrigPolynomial({{1.0, 0.0, Frequency::sqrt_integer(1)},
                         {0.5, 0.0, Frequency::sqrt_integer(2)}});
}

inline TrigPolynomial example_periodic_pair(double a) {
  if (!(a > 0.0)) throw SpecParseError("periodic pair needs a > 0");
  return TrigPolynomial({{1.0, 0.0, Frequency::rational(1, 1)},
                         {a, 0.0, Frequency::rational(2, 1)}});
}

inline TrigPolynomial example_dependent_triple() {
  return TrigPolynomial({{1.0, 0.0, Frequency::rational(1, 1)},
                         {1.0, 0.0, Frequency::rational(2, 1)},
                         {0.1, 0.0, Frequency::sqrt_integer(3)}});
}

inline TrigPolynomial example_five_sqrt(double a) {
  if (!(a > 0.0)) throw SpecParseError("five-term example needs a > 0");
  const Rational scale = Rational::from_double(a);
  return TrigPolynomial({{5.0, 0.0, Frequency::sqrt_integer(1, scale)},
                         {5.0, 0.0, Frequency::sqrt_integer(2, scale)},
                         {6.0, 0.0, Frequency::sqrt_integer(3, scale)},
                         {7.0, 0.0, Frequency::sqrt_integer(5, scale)},
                         {9.0, 0.0, Frequency::sqrt_integer(7, scale)}});
}

// a < 0 picks the key's default amplitude (2 for "2.16", 1 for "3.9").
inline TrigPolynomial example_by_key(const std::string& key, double a = -1.0) {
  if (key == "2.8") return example_pair_sqrt2();
  if (key == "2.9") return example_pair_sqrt2_half();
  if (key == "2.16") return example_periodic_pair(a < 0.0 ? 2.0 : a);
  if (key == "2.19") return example_dependent_triple();
  if (key == "3.9") return example_five_sqrt(a < 0.0 ? 1.0 : a);
  throw SpecParseError("unknown example key '" + key + "'");
}

struct FigurePreset {
  int id = 0;
  std::string example_key;
  double a = -1.0;
  double t_max = 0.0;
  double step = 0.0;
};

// Figure presets: examples 2.8, 2.9, 2.16 (a=2), 2.19 with t_max 200
// (figure 3: one period 2*pi) and step 0.01.
inline FigurePreset figure_preset(int id) {
  switch (id) {
    case 1: return {1, "2.8", -1.0, 200.0, 0.01};
    case 2: return {2, "2.9", -1.0, 200.0, 0.01};
    case 3: return {3, "2.16", 2.0, 2.0 * std::numbers::pi, 0.01};
    case 4: return {4, "2.19", -1.0, 200.0, 0.01};
    default: throw SpecParseError("figure id must be 1..4");
  }
}

}  // namespace apring
