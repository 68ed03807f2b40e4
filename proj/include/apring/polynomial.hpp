#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "apring/errors.hpp"
#include "apring/frequency.hpp"

namespace apring {

// One term |c| * e^{i(lambda x + phi)} of a trigonometric polynomial. The
// coefficient is kept as (modulus, phase): all the closed-form quantities
// downstream depend on the moduli alone, and the phase separates cleanly.
struct Term {
  double modulus = 0.0;
  double phase = 0.0;
  Frequency frequency = Frequency::real(0.0);
};

struct ComponentPair {
  double a = 0.0;
  double b = 0.0;
};

class TrigPolynomial {
 public:
  explicit TrigPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw SpecParseError("polynomial needs at least one term");
    for (const Term& t : terms_) {
      if (!(t.modulus >= 0.0) || !std::isfinite(t.modulus))
        throw SpecParseError("term modulus must be a finite nonnegative number");
      if (!std::isfinite(t.phase)) throw SpecParseError("term phase must be finite");
    }
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::vector<double> moduli() const {
    std::vector<double> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(t.modulus);
    return out;
  }

  std::vector<Frequency> frequencies() const {
    std::vector<Frequency> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(t.frequency);
    return out;
  }

  double sum_moduli() const {
    double s = 0.0;
    for (const Term& t : terms_) s += t.modulus;
    return s;
  }

  double max_abs_frequency() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::fabs(t.frequency.numeric_value()));
    return m;
  }

 private:
  std::vector<Term> terms_;
};

inline ComponentPair components(const TrigPolynomial& f, double x) {
  ComponentPair p;
  for (const Term& t : f.terms()) {
    const double arg = t.frequency.numeric_value() * x + t.phase;
    p.a += t.modulus * std::cos(arg);
    p.b += t.modulus * std::sin(arg);
  }
  return p;
}

inline double evaluate_abs2(const TrigPolynomial& f, double x) {
  const ComponentPair p = components(f, x);
  return p.a * p.a + p.b * p.b;
}

inline double abs2_derivative(const TrigPolynomial& f, double x) {
  double a = 0.0, b = 0.0, da = 0.0, db = 0.0;
  for (const Term& t : f.terms()) {
    const double lambda = t.frequency.numeric_value();
    const double arg = lambda * x + t.phase;
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    a += t.modulus * c;
    b += t.modulus * s;
    da -= t.modulus * lambda * s;
    db += t.modulus * lambda * c;
  }
  return 2.0 * (a * da + b * db);
}

namespace detail {

// |f|^2 and its first two x-derivatives in one pass; used by scan refinement.
struct Abs2Jet {
  double g = 0.0;
  double dg = 0.0;
  double ddg = 0.0;
};

inline Abs2Jet abs2_jet(const TrigPolynomial& f, double x) {
  double a = 0.0, b = 0.0, da = 0.0, db = 0.0, dda = 0.0, ddb = 0.0;
  for (const Term& t : f.terms()) {
    const double lambda = t.frequency.numeric_value();
    const double arg = lambda * x + t.phase;
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    const double mc = t.modulus * c;
    const double ms = t.modulus * s;
    a += mc;
    b += ms;
    da -= lambda * ms;
    db += lambda * mc;
    dda -= lambda * lambda * mc;
    ddb -= lambda * lambda * ms;
  }
  Abs2Jet jet;
  jet.g = a * a + b * b;
  jet.dg = 2.0 * (a * da + b * db);
  jet.ddg = 2.0 * (da * da + a * dda + db * db + b * ddb);
  return jet;
}

}  // namespace detail

}  // namespace apring
