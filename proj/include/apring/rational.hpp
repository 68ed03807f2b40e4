#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "apring/errors.hpp"

namespace apring {

// Exact rational, stored reduced with den > 0. Covers hand-written fractions
// and the dyadic values produced by exact double conversion.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;

  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw SpecParseError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  // Exact conversion: every finite double is num / 2^k. Throws when the
  // dyadic denominator or numerator does not fit in 64 bits.
  static Rational from_double(double value) {
    if (!std::isfinite(value)) throw SpecParseError("rational from non-finite double");
    if (value == 0.0) return Rational(0, 1);
    int exp = 0;
    const double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    int e2 = exp - 53;
    while (m != 0 && (m % 2) == 0 && e2 < 0) {
      m /= 2;
      ++e2;
    }
    if (e2 >= 0) {
      if (e2 > 9) throw SpecParseError("rational conversion overflow: " + std::to_string(value));
      return Rational(m << e2, 1);
    }
    if (e2 < -62) throw SpecParseError("rational denominator overflow: " + std::to_string(value));
    return Rational(m, std::int64_t{1} << (-e2));
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }

  Rational times(std::int64_t k) const {
    const __int128 n = static_cast<__int128>(num) * k;
    if (n > INT64_MAX || n < INT64_MIN) throw SpecParseError("rational overflow");
    return Rational(static_cast<std::int64_t>(n), den);
  }

  bool operator==(const Rational&) const = default;
};

}  // namespace apring
