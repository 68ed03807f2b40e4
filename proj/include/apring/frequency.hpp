#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "apring/errors.hpp"
#include "apring/rational.hpp"

namespace apring {

enum class FrequencyKind { SqrtInteger, Rational, Real };

enum class IndependenceClass { Independent, Dependent, Unknown };

inline constexpr std::int64_t kMaxRadicand = 1'000'000'000;

// A frequency is either exact (q*sqrt(d) with rational q and squarefree
// integer d, or a plain rational) or an opaque float. Exact kinds are kept in
// canonical form so that equality of direction reduces to equality of the
// radicand: sqrt(8) is stored as 2*sqrt(2), and a rational p/q is the d == 1
// direction.
class Frequency {
 public:
  static Frequency sqrt_integer(std::int64_t radicand, Rational scale = Rational(1, 1)) {
    if (radicand < 1) throw SpecParseError("sqrt radicand must be >= 1");
    if (radicand > kMaxRadicand) throw SpecParseError("sqrt radicand exceeds cap");
    // Fold square factors into the scale: sqrt(s^2 * d) = s * sqrt(d).
    for (std::int64_t d = 2; d * d <= radicand; ++d) {
      while (radicand % (d * d) == 0) {
        radicand /= d * d;
        scale = scale.times(d);
      }
    }
    Frequency f;
    f.kind_ = FrequencyKind::SqrtInteger;
    f.radicand_ = radicand;
    f.scale_ = scale;
    return f;
  }

  static Frequency rational(std::int64_t num, std::int64_t den) {
    Frequency f;
    f.kind_ = FrequencyKind::Rational;
    f.scale_ = Rational(num, den);
    return f;
  }

  static Frequency real(double value) {
    if (!std::isfinite(value)) throw SpecParseError("real frequency must be finite");
    Frequency f;
    f.kind_ = FrequencyKind::Real;
    f.real_ = value;
    return f;
  }

  FrequencyKind kind() const { return kind_; }

  // SqrtInteger accessors; radicand is squarefree by construction.
  std::int64_t radicand() const { return radicand_; }
  const Rational& scale() const { return scale_; }

  // Rational accessor.
  const Rational& rational_value() const { return scale_; }

  double numeric_value() const {
    switch (kind_) {
      case FrequencyKind::SqrtInteger:
        return scale_.value() * std::sqrt(static_cast<double>(radicand_));
      case FrequencyKind::Rational:
        return scale_.value();
      case FrequencyKind::Real:
        return real_;
    }
    return 0.0;
  }

  bool operator==(const Frequency&) const = default;

 private:
  Frequency() = default;
  FrequencyKind kind_ = FrequencyKind::Real;
  std::int64_t radicand_ = 1;
  Rational scale_{1, 1};  // SqrtInteger scale, or the Rational value itself
  double real_ = 0.0;
};

// Conservative rational-independence test. Square roots of pairwise distinct
// squarefree integers (with d == 1 acting as the rational direction) are
// independent; any shared direction or zero frequency is an exact dependence;
// float frequencies can never certify independence.
inline IndependenceClass classify_independence(const std::vector<Frequency>& freqs) {
  if (freqs.empty()) throw EmptyList();
  bool has_real = false;
  bool dependent = false;
  std::vector<std::int64_t> radicands;
  std::vector<double> reals;
  for (const Frequency& f : freqs) {
    switch (f.kind()) {
      case FrequencyKind::SqrtInteger:
        if (f.scale().is_zero()) dependent = true;
        radicands.push_back(f.radicand());
        break;
      case FrequencyKind::Rational:
        if (f.rational_value().is_zero()) dependent = true;
        radicands.push_back(1);  // rational direction
        break;
      case FrequencyKind::Real:
        has_real = true;
        if (f.numeric_value() == 0.0) dependent = true;
        reals.push_back(f.numeric_value());
        break;
    }
  }
  for (std::size_t i = 0; i < radicands.size() && !dependent; ++i)
    for (std::size_t j = i + 1; j < radicands.size(); ++j)
      if (radicands[i] == radicands[j]) {
        dependent = true;
        break;
      }
  for (std::size_t i = 0; i < reals.size() && !dependent; ++i)
    for (std::size_t j = i + 1; j < reals.size(); ++j)
      if (reals[i] == reals[j]) {
        dependent = true;
        break;
      }
  if (dependent) return IndependenceClass::Dependent;
  if (has_real) return IndependenceClass::Unknown;
  return IndependenceClass::Independent;
}

inline const char* independence_name(IndependenceClass c) {
  switch (c) {
    case IndependenceClass::Independent: return "independent";
    case IndependenceClass::Dependent: return "dependent";
    case IndependenceClass::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace apring
