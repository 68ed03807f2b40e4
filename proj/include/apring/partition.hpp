#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "apring/errors.hpp"

namespace apring {

// Multiset {w_1,...,w_n} of nonnegative weights. `decimals`, when nonempty,
// carries the original textual forms so the integer solver can scale exactly.
struct WeightSet {
  std::vector<double> weights;
  std::vector<std::string> decimals;
};

struct SignVector {
  std::vector<int> signs;  // entries +1 / -1, same length as the weights
};

enum class Method { BruteForce, MeetInMiddle, IntegerDP, KarmarkarKarp, ClosedForm };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::BruteForce: return "BruteForce";
    case Method::MeetInMiddle: return "MeetInMiddle";
    case Method::IntegerDP: return "IntegerDP";
    case Method::KarmarkarKarp: return "KarmarkarKarp";
    case Method::ClosedForm: return "ClosedForm";
  }
  return "?";
}

struct PartitionResult {
  double m = 0.0;
  SignVector signs;
  Method method = Method::BruteForce;
};

inline constexpr std::size_t kBruteForceCap = 24;
inline constexpr std::size_t kMeetInMiddleCap = 40;
inline constexpr long long kDpSumCap = 1LL << 26;

namespace detail {

inline void validate_weights(const WeightSet& w) {
  if (w.weights.empty()) throw EmptyList();
  for (double v : w.weights)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw SpecParseError("weights must be finite and nonnegative");
  if (!w.decimals.empty() && w.decimals.size() != w.weights.size())
    throw SpecParseError("decimal strings must match the weight count");
}

inline double signed_sum(const std::vector<double>& w, const std::vector<int>& signs) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += signs[i] > 0 ? w[i] : -w[i];
  return s;
}

inline void normalize_first_sign(std::vector<int>& signs) {
  if (!signs.empty() && signs[0] < 0)
    for (int& s : signs) s = -s;
}

// Sign vector encoded by counter c: bit (n-1-j) of c carries the sign of
// weight j >= 1 (set bit = +1), weight 0 is fixed +1. Ascending c enumerates
// sign vectors in ascending lexicographic order under -1 < +1, so tracking
// strict improvements yields the lexicographically smallest optimum.
inline std::vector<int> decode_signs(std::uint64_t c, std::size_t n) {
  std::vector<int> signs(n, 1);
  for (std::size_t j = 1; j < n; ++j)
    signs[j] = ((c >> (n - 1 - j)) & 1u) ? 1 : -1;
  return signs;
}

}  // namespace detail

// Exhaustive minimum over all 2^(n-1) sign patterns (first sign +1 by
// symmetry). Sums are assembled from two direct half-sums so that no value
// carries more than ~n rounding errors.
inline PartitionResult exact_bruteforce(const WeightSet& w, std::size_t cap = kBruteForceCap) {
  detail::validate_weights(w);
  const std::vector<double>& v = w.weights;
  const std::size_t n = v.size();
  if (n > cap) throw TooManyWeights(n, cap);

  const std::size_t free_n = n - 1;
  const std::size_t low = std::min<std::size_t>(free_n, 12);
  const std::size_t high = free_n - low;

  // low block = last `low` weights; counter bit b maps to weight n-1-b
  std::vector<double> low_sum(std::size_t{1} << low, 0.0);
  for (std::uint64_t m = 0; m < low_sum.size(); ++m) {
    double s = 0.0;
    for (std::size_t b = 0; b < low; ++b) {
      const double wv = v[n - 1 - b];
      s += ((m >> b) & 1u) ? wv : -wv;
    }
    low_sum[m] = s;
  }

  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_c = 0;
  for (std::uint64_t hi = 0; hi < (std::uint64_t{1} << high); ++hi) {
    double base = v[0];
    for (std::size_t b = 0; b < high; ++b) {
      const double wv = v[n - 1 - low - b];
      base += ((hi >> b) & 1u) ? wv : -wv;
    }
    for (std::uint64_t lo = 0; lo < (std::uint64_t{1} << low); ++lo) {
      const double val = std::fabs(base + low_sum[lo]);
      if (val < best) {
        best = val;
        best_c = (hi << low) | lo;
      }
    }
  }

  PartitionResult r;
  r.method = Method::BruteForce;
  r.signs.signs = detail::decode_signs(best_c, n);
  r.m = std::fabs(detail::signed_sum(v, r.signs.signs));
  return r;
}

// Split the weights in two halves, enumerate signed half-sums, and match each
// left sum with the closest right sums in a sorted table. Exact like brute
// force but reaches n = 40.
inline PartitionResult exact_meet_in_middle(const WeightSet& w, std::size_t cap = kMeetInMiddleCap) {
  detail::validate_weights(w);
  const std::vector<double>& v = w.weights;
  const std::size_t n = v.size();
  if (n > cap) throw TooManyWeights(n, cap);

  const std::size_t na = (n + 1) / 2;  // weight 0 lives here with fixed sign +1
  const std::size_t nb = n - na;

  struct Entry {
    double sum;
    std::uint32_t mask;
  };

  std::vector<Entry> right(std::size_t{1} << nb);
  for (std::uint32_t m = 0; m < right.size(); ++m) {
    double s = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      const double wv = v[na + b];
      s += ((m >> b) & 1u) ? wv : -wv;
    }
    right[m] = {s, m};
  }
  std::sort(right.begin(), right.end(), [](const Entry& a, const Entry& b) {
    return a.sum < b.sum || (a.sum == b.sum && a.mask < b.mask);
  });

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_a = 0, best_b = 0;
  const std::uint64_t a_count = std::uint64_t{1} << (na - 1);
  for (std::uint64_t am = 0; am < a_count; ++am) {
    double s = v[0];
    for (std::size_t b = 0; b < na - 1; ++b) {
      const double wv = v[1 + b];
      s += ((am >> b) & 1u) ? wv : -wv;
    }
    const double target = -s;
    auto it = std::lower_bound(right.begin(), right.end(), target,
                               [](const Entry& e, double t) { return e.sum < t; });
    for (int probe = 0; probe < 2; ++probe) {
      auto cand = it;
      if (probe == 1) {
        if (it == right.begin()) continue;
        cand = std::prev(it);
      } else if (it == right.end()) {
        continue;
      }
      const double val = std::fabs(s + cand->sum);
      if (val < best) {
        best = val;
        best_a = static_cast<std::uint32_t>(am);
        best_b = cand->mask;
      }
    }
  }

  PartitionResult r;
  r.method = Method::MeetInMiddle;
  r.signs.signs.assign(n, 1);
  for (std::size_t b = 0; b < na - 1; ++b)
    r.signs.signs[1 + b] = ((best_a >> b) & 1u) ? 1 : -1;
  for (std::size_t b = 0; b < nb; ++b)
    r.signs.signs[na + b] = ((best_b >> b) & 1u) ? 1 : -1;
  r.m = std::fabs(detail::signed_sum(v, r.signs.signs));
  return r;
}

namespace detail {

// Exact integer from a decimal string times an integer scale, when it fits;
// avoids double rounding for textual inputs like "0.1" at scale 10.
inline std::optional<long long> decimal_times_scale(const std::string& text, long long scale) {
  __int128 digits = 0;
  int frac_digits = 0;
  bool seen_digit = false, in_frac = false, neg = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.') {
      if (in_frac) return std::nullopt;
      in_frac = true;
      continue;
    }
    if (ch < '0' || ch > '9') return std::nullopt;  // exponents fall back to the float path
    seen_digit = true;
    digits = digits * 10 + (ch - '0');
    if (digits > (static_cast<__int128>(1) << 100)) return std::nullopt;
    if (in_frac) ++frac_digits;
  }
  if (!seen_digit || neg) return std::nullopt;
  __int128 num = digits * scale;
  for (int k = 0; k < frac_digits; ++k) {
    if (num % 10 != 0) return std::nullopt;
    num /= 10;
  }
  if (num > std::numeric_limits<long long>::max()) return std::nullopt;
  return static_cast<long long>(num);
}

}  // namespace detail

// Pseudo-polynomial subset-sum DP over a bitset of reachable sums; exact when
// weight*scale is integral. Snapshots are checkpointed so reconstruction stays
// within a fixed memory budget.
inline PartitionResult exact_integer_dp(const WeightSet& w, long long scale,
                                        long long sum_cap = kDpSumCap) {
  detail::validate_weights(w);
  if (scale < 1) throw SpecParseError("dp scale must be a positive integer");
  const std::vector<double>& v = w.weights;
  const std::size_t n = v.size();

  std::vector<long long> k(n);
  long long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<long long> exact;
    if (!w.decimals.empty()) exact = detail::decimal_times_scale(w.decimals[i], scale);
    if (exact) {
      k[i] = *exact;
    } else {
      const double scaled = v[i] * static_cast<double>(scale);
      const double rounded = std::nearbyint(scaled);
      if (std::fabs(scaled - rounded) > 1e-9) throw NotIntegral(i, scaled);
      k[i] = static_cast<long long>(rounded);
    }
    total += k[i];
    if (total > sum_cap) throw SumCapExceeded(total, sum_cap);
  }

  const std::size_t words = static_cast<std::size_t>(total / 64) + 1;
  auto shift_or = [&](std::vector<std::uint64_t>& dp, long long item) {
    if (item == 0) return;
    const std::size_t word_shift = static_cast<std::size_t>(item / 64);
    const unsigned bit_shift = static_cast<unsigned>(item % 64);
    if (bit_shift == 0) {
      for (std::size_t i = words; i-- > word_shift;) dp[i] |= dp[i - word_shift];
    } else {
      for (std::size_t i = words; i-- > word_shift;) {
        std::uint64_t x = dp[i - word_shift] << bit_shift;
        if (i > word_shift) x |= dp[i - word_shift - 1] >> (64 - bit_shift);
        dp[i] |= x;
      }
    }
  };
  auto test_bit = [](const std::vector<std::uint64_t>& dp, long long s) {
    return (dp[static_cast<std::size_t>(s / 64)] >> (s % 64)) & 1u;
  };

  // checkpoint stride keeps snapshot memory under ~64 MB
  std::size_t stride = 1;
  while ((n / stride + 2) * words * 8 > (std::size_t{64} << 20)) ++stride;

  std::vector<std::vector<std::uint64_t>> checkpoints;  // dp after items [0, c*stride)
  std::vector<std::uint64_t> dp(words, 0);
  dp[0] = 1;
  checkpoints.push_back(dp);
  for (std::size_t i = 0; i < n; ++i) {
    shift_or(dp, k[i]);
    if ((i + 1) % stride == 0) checkpoints.push_back(dp);
  }

  // pick the reachable subset sum closest to total/2; prefer the high side
  long long best_s = -1;
  {
    const long long half_hi = (total + 1) / 2;
    const long long half_lo = total / 2;
    for (long long d = 0; best_s < 0; ++d) {
      const long long hi_c = half_hi + d;
      const long long lo_c = half_lo - d;
      const bool hi_ok = hi_c <= total && test_bit(dp, hi_c);
      const bool lo_ok = lo_c >= 0 && test_bit(dp, lo_c);
      if (hi_ok && (!lo_ok || (2 * hi_c - total) <= (total - 2 * lo_c))) {
        best_s = hi_c;
      } else if (lo_ok) {
        best_s = lo_c;
      }
      if (hi_c > total && lo_c < 0) break;
    }
  }

  // reconstruct membership by walking items backwards from each checkpoint
  std::vector<int> signs(n, -1);
  long long t = best_s;
  std::size_t item = n;
  while (item > 0) {
    const std::size_t cp_index = (item - 1) / stride;
    std::vector<std::uint64_t> prefix = checkpoints[cp_index];
    const std::size_t base = cp_index * stride;
    // recompute prefix states between checkpoint and current item
    std::vector<std::vector<std::uint64_t>> levels;
    levels.push_back(prefix);
    for (std::size_t i = base; i + 1 < item; ++i) {
      shift_or(prefix, k[i]);
      levels.push_back(prefix);
    }
    for (std::size_t i = item; i-- > base;) {
      const std::vector<std::uint64_t>& before = levels[i - base];
      if (test_bit(before, t)) {
        signs[i] = -1;  // leave item out of the subset
      } else {
        signs[i] = 1;
        t -= k[i];
      }
    }
    item = base;
  }

  detail::normalize_first_sign(signs);
  PartitionResult r;
  r.method = Method::IntegerDP;
  r.signs.signs = std::move(signs);
  r.m = static_cast<double>(std::llabs(2 * best_s - total)) / static_cast<double>(scale);
  return r;
}

// Largest-differencing heuristic: replace the two largest values by their
// difference until one value remains. Signs are recovered by two-coloring the
// difference tree, so the reported value always has a certificate.
inline PartitionResult karmarkar_karp(const WeightSet& w) {
  detail::validate_weights(w);
  const std::vector<double>& v = w.weights;
  const std::size_t n = v.size();

  struct Node {
    double value;
    int plus = -1;   // child keeping the parent's sign
    int minus = -1;  // child with the flipped sign
  };
  std::vector<Node> nodes;
  nodes.reserve(2 * n);
  auto cmp = [&](int lhs, int rhs) {
    // max-heap by value; on ties the older node wins
    return nodes[lhs].value < nodes[rhs].value ||
           (nodes[lhs].value == nodes[rhs].value && lhs > rhs);
  };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back({v[i]});
    heap.push(static_cast<int>(i));
  }
  for (std::size_t round = 1; round < n; ++round) {
    const int a = heap.top();
    heap.pop();
    const int b = heap.top();
    heap.pop();
    nodes.push_back({nodes[a].value - nodes[b].value, a, b});
    heap.push(static_cast<int>(nodes.size() - 1));
  }
  const int root = heap.top();

  std::vector<int> signs(n, 1);
  std::vector<std::pair<int, int>> stack{{root, 1}};
  while (!stack.empty()) {
    auto [id, color] = stack.back();
    stack.pop_back();
    if (nodes[id].plus < 0) {
      signs[id] = color;
    } else {
      stack.push_back({nodes[id].plus, color});
      stack.push_back({nodes[id].minus, -color});
    }
  }
  detail::normalize_first_sign(signs);

  PartitionResult r;
  r.method = Method::KarmarkarKarp;
  r.m = nodes[root].value;
  r.signs.signs = std::move(signs);
  return r;
}

// Closed forms for n <= 4 over the descending order w_1 >= w_2 >= w_3 >= w_4:
//   n=2: |w1-w2|; n=3: |w1-w2-w3|;
//   n=4: |w1-w2-w3-w4| when w1-w2 >= w3, else |w3-w1+w2-w4|.
inline PartitionResult closed_form_small(const WeightSet& w) {
  detail::validate_weights(w);
  const std::vector<double>& v = w.weights;
  const std::size_t n = v.size();
  if (n < 1 || n > 4) throw WrongArity(n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = v[order[i]];

  double m = 0.0;
  std::vector<int> sorted_signs(n, 1);
  switch (n) {
    case 1:
      m = s[0];
      break;
    case 2:
      m = std::fabs(s[0] - s[1]);
      sorted_signs = {1, -1};
      break;
    case 3:
      m = std::fabs(s[0] - s[1] - s[2]);
      sorted_signs = {1, -1, -1};
      break;
    case 4:
      if (s[0] - s[1] >= s[2]) {
        m = std::fabs(s[0] - s[1] - s[2] - s[3]);
        sorted_signs = {1, -1, -1, -1};
      } else {
        m = std::fabs(s[2] - s[0] + s[1] - s[3]);
        sorted_signs = {-1, 1, 1, -1};
      }
      break;
  }

  std::vector<int> signs(n, 1);
  for (std::size_t i = 0; i < n; ++i) signs[order[i]] = sorted_signs[i];
  detail::normalize_first_sign(signs);

  PartitionResult r;
  r.method = Method::ClosedForm;
  r.m = m;
  r.signs.signs = std::move(signs);
  return r;
}

namespace detail {

inline bool integral_at_unit_scale(const WeightSet& w, long long sum_cap) {
  long long total = 0;
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    const double rounded = std::nearbyint(w.weights[i]);
    if (std::fabs(w.weights[i] - rounded) > 1e-9) return false;
    total += static_cast<long long>(rounded);
    if (total > sum_cap) return false;
  }
  return true;
}

}  // namespace detail

// Dispatcher: closed form for n <= 4, integer DP for integral weights under
// the sum cap, meet-in-the-middle up to n = 40, otherwise no exact method.
// Karmarkar-Karp runs only when forced.
inline PartitionResult solve_partition(const WeightSet& w,
                                       std::optional<Method> forced = std::nullopt,
                                       long long scale = 1) {
  detail::validate_weights(w);
  const std::size_t n = w.weights.size();
  if (forced) {
    switch (*forced) {
      case Method::BruteForce: return exact_bruteforce(w);
      case Method::MeetInMiddle: return exact_meet_in_middle(w);
      case Method::IntegerDP: return exact_integer_dp(w, scale);
      case Method::KarmarkarKarp: return karmarkar_karp(w);
      case Method::ClosedForm: return closed_form_small(w);
    }
  }
  if (n <= 4) return closed_form_small(w);
  if (detail::integral_at_unit_scale(w, kDpSumCap)) return exact_integer_dp(w, 1);
  if (n <= kMeetInMiddleCap) return exact_meet_in_middle(w);
  throw NoExactMethod(n);
}

}  // namespace apring
