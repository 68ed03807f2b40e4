#pragma once

#include <random>
#include <vector>

#include "apring/frequency.hpp"
#include "apring/polynomial.hpp"

namespace test_support {

inline apring::TrigPolynomial random_polynomial(std::mt19937& rng, std::size_t max_terms = 6,
                                                double max_modulus = 10.0,
                                                double max_freq = 10.0) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_terms);
  std::uniform_real_distribution<double> mod_dist(0.0, max_modulus);
  std::uniform_real_distribution<double> phase_dist(-3.1, 3.1);
  std::uniform_real_distribution<double> freq_dist(-max_freq, max_freq);
  std::vector<apring::Term> terms;
  const std::size_t n = n_dist(rng);
  for (std::size_t i = 0; i < n; ++i)
    terms.push_back({mod_dist(rng), phase_dist(rng), apring::Frequency::real(freq_dist(rng))});
  return apring::TrigPolynomial(std::move(terms));
}

inline std::vector<double> random_weights(std::mt19937& rng, std::size_t n, double lo = 0.0,
                                          double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> w(n);
  for (double& v : w) v = dist(rng);
  return w;
}

inline std::vector<double> random_integer_weights(std::mt19937& rng, std::size_t n,
                                                  long long hi = 200) {
  std::uniform_int_distribution<long long> dist(0, hi);
  std::vector<double> w(n);
  for (double& v : w) v = static_cast<double>(dist(rng));
  return w;
}

inline double sum(const std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  return s;
}

}  // namespace test_support
