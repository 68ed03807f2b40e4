// Acceptance suite: runs every shipped criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apring/apring.hpp"

namespace {

using namespace apring;
constexpr double kPi = std::numbers::pi;

std::string run_cli(const std::string& args, const std::string& env, int* exit_code) {
  const std::string cmd = env + " " + std::string(APRING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    if (exit_code) *exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

WeightSet make(std::vector<double> w) {
  WeightSet s;
  s.weights = std::move(w);
  return s;
}

double sum(const std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  return s;
}

using Problems = std::vector<std::string>;

struct Criterion {
  int id;
  std::string title;
  double budget_ms;
  std::function<void(Problems&)> body;
};

// ---------------------------------------------------------------------------

void criterion_partition_exactness(Problems& p) {
  const WeightSet w = make({5, 5, 6, 7, 9});
  const double bf = exact_bruteforce(w).m;
  const double mim = exact_meet_in_middle(w).m;
  const double dp = exact_integer_dp(w, 1).m;
  const double kk = karmarkar_karp(w).m;
  if (bf != 0.0) p.push_back("brute force m = " + fmt(bf) + ", want 0");
  if (mim != 0.0) p.push_back("meet-in-middle m = " + fmt(mim) + ", want 0");
  if (dp != 0.0) p.push_back("integer dp m = " + fmt(dp) + ", want 0");
  if (kk != 2.0) p.push_back("karmarkar-karp m = " + fmt(kk) + ", want 2");
}

void criterion_closed_forms(Problems& p) {
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    for (int it = 0; it < 1000; ++it) {
      WeightSet w;
      for (std::size_t i = 0; i < n; ++i) w.weights.push_back(dist(rng));
      const double cf = closed_form_small(w).m;
      const double bf = exact_bruteforce(w).m;
      if (std::fabs(cf - bf) > 1e-12 * sum(w.weights)) {
        p.push_back("n=" + std::to_string(n) + " closed form " + fmt(cf) + " vs brute " + fmt(bf));
        return;
      }
    }
  }
}

void criterion_kk_small_exact(Problems& p) {
  std::mt19937 rng(1002);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int it = 0; it < 1000; ++it) {
      WeightSet w;
      for (std::size_t i = 0; i < n; ++i) w.weights.push_back(dist(rng));
      const double kk = karmarkar_karp(w).m;
      const double bf = exact_bruteforce(w).m;
      if (std::fabs(kk - bf) > 1e-12 * sum(w.weights)) {
        p.push_back("n=" + std::to_string(n) + " kk " + fmt(kk) + " vs brute " + fmt(bf));
        return;
      }
    }
  }
}

void criterion_radii_formulas(Problems& p) {
  auto check = [&](const char* name, const TrigPolynomial& f, double big, double small) {
    const ExtremaFormulas r = radii_formulas(f);
    if (r.big_m != big || r.small_m != small)
      p.push_back(std::string(name) + ": got (" + fmt(r.big_m) + ", " + fmt(r.small_m) +
                  "), want (" + fmt(big) + ", " + fmt(small) + ")");
  };
  check("example 2.8", example_pair_sqrt2(), 2.0, 0.0);
  check("example 2.9", example_pair_sqrt2_half(), 1.5, 0.5);
  check("example 2.16 a=2", example_periodic_pair(2.0), 3.0, 1.0);
  check("example 2.19", example_dependent_triple(), 2.1, 0.1);
}

void criterion_scan_attainment(Problems& p) {
  const ScanReport r216 = scan_extrema(example_periodic_pair(2.0), 0.0, 2.0 * kPi, 1e-3, true);
  if (std::fabs(r216.min_val - 1.0) > 1e-9)
    p.push_back("2.16 min " + fmt(r216.min_val) + " not within 1e-9 of 1");
  if (std::fabs(r216.max_val - 3.0) > 1e-9)
    p.push_back("2.16 max " + fmt(r216.max_val) + " not within 1e-9 of 3");

  const ScanReport r28 = scan_extrema(example_pair_sqrt2(), 0.0, 100.0, 1e-3, true);
  if (r28.min_val > 1e-6) p.push_back("2.8 min " + fmt(r28.min_val) + " above 1e-6");

  const ScanReport r29 = scan_extrema(example_pair_sqrt2_half(), 0.0, 100.0, 1e-3, true);
  if (std::fabs(r29.min_val - 0.5) > 1e-6)
    p.push_back("2.9 min " + fmt(r29.min_val) + " not within 1e-6 of 0.5");
}

void criterion_scan_soundness(Problems& p) {
  std::mt19937 rng(1006);
  std::uniform_int_distribution<std::size_t> n_dist(1, 6);
  std::uniform_real_distribution<double> mod_dist(0.0, 10.0);
  std::uniform_real_distribution<double> phase_dist(-3.1, 3.1);
  std::uniform_real_distribution<double> freq_dist(-10.0, 10.0);
  for (int it = 0; it < 200; ++it) {
    std::vector<Term> terms;
    const std::size_t n = n_dist(rng);
    for (std::size_t i = 0; i < n; ++i)
      terms.push_back({mod_dist(rng), phase_dist(rng), Frequency::real(freq_dist(rng))});
    const TrigPolynomial f{terms};
    const double lambda_max = f.max_abs_frequency();
    const double guard = lambda_max > 0.0 ? kPi / (4.0 * lambda_max) : 0.25;
    const double step = std::min(0.5 * guard, 0.05);
    const double window = 16.0;
    const double big_m = f.sum_moduli();

    const ScanReport base = scan_extrema(f, 0.0, window, step, true);
    const ScanReport wider = scan_extrema(f, 0.0, 2.0 * window, step, true);
    const ScanReport finer = scan_extrema(f, 0.0, window, 0.5 * step, true);
    for (const ScanReport* r : {&base, &wider, &finer}) {
      if (r->max_val > big_m + 1e-9) {
        p.push_back("case " + std::to_string(it) + ": max " + fmt(r->max_val) +
                    " above modulus sum " + fmt(big_m));
        return;
      }
    }
    if (wider.min_val > base.min_val) {
      p.push_back("case " + std::to_string(it) + ": window doubling raised min " +
                  fmt(base.min_val) + " -> " + fmt(wider.min_val));
      return;
    }
    if (finer.min_val > base.min_val) {
      p.push_back("case " + std::to_string(it) + ": step halving raised min " +
                  fmt(base.min_val) + " -> " + fmt(finer.min_val));
      return;
    }
  }
}

void criterion_kronecker_certificate(Problems& p) {
  const TrigPolynomial f = example_pair_sqrt2();
  const auto bound = certified_upper_bound(f, 0.01, 1e3);
  if (!bound) {
    p.push_back("no aligning tau found in [0, 1e3]");
    return;
  }
  if (bound->bound > 0.02)
    p.push_back("bound " + fmt(bound->bound) + " exceeds m + M*delta = 0.02");
  // re-check the phase inequality verbatim
  KroneckerQuery q;
  q.frequencies = f.frequencies();
  q.targets = {0.0, kPi};
  q.delta = 0.01;
  q.window = 1e3;
  if (!kronecker_satisfied(q, bound->x))
    p.push_back("returned tau " + fmt(bound->x) + " violates the phase inequality");
}

void criterion_ring_coverage(Problems& p) {
  const CoverageReport r = ring_coverage(example_pair_sqrt2_half(), 1e4, 1000000, 10, 24);
  if (r.fraction_covered < 0.95)
    p.push_back("coverage " + fmt(r.fraction_covered) + " below 0.95");
  if (r.observed_max_abs > 1.5 + 1e-9)
    p.push_back("observed max " + fmt(r.observed_max_abs) + " above big_m");
}

void criterion_limit_theorem(Problems& p) {
  const CoefficientSeries s = CoefficientSeries::geometric(0.5, 0.5);
  const auto rows = mn_sequence(s, 20);
  WeightSet w;
  for (const ConvergenceRow& row : rows) {
    w.weights.push_back(s.coefficient(row.n));
    const double expect = std::ldexp(1.0, -static_cast<int>(row.n));
    const double oracle = exact_bruteforce(w).m;
    if (row.m_n != expect || oracle != expect) {
      p.push_back("n=" + std::to_string(row.n) + ": m_n " + fmt(row.m_n) + ", oracle " +
                  fmt(oracle) + ", want " + fmt(expect));
      return;
    }
  }
  std::mt19937 rng(1009);
  std::uniform_int_distribution<std::size_t> n_dist(2, 15);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  for (int it = 0; it < 200; ++it) {
    std::vector<double> values(n_dist(rng));
    for (double& v : values) v = dist(rng);
    const CoefficientSeries es = CoefficientSeries::explicit_list(values);
    if (!cauchy_check(mn_sequence(es, values.size()), es)) {
      p.push_back("cauchy check failed on random series " + std::to_string(it));
      return;
    }
  }
}

void criterion_claim_probe(Problems& p) {
  // probe 1: unit moduli on frequencies 1, 2, 3
  const TrigPolynomial triple({{1.0, 0.0, Frequency::rational(1, 1)},
                               {1.0, 0.0, Frequency::rational(2, 1)},
                               {1.0, 0.0, Frequency::rational(3, 1)}});
  const double at_two_thirds_pi = evaluate_abs2(triple, 2.0 * kPi / 3.0);
  const double formula_m = solve_partition(make({1, 1, 1})).m;
  if (at_two_thirds_pi > 1e-15)
    p.push_back("|f(2pi/3)|^2 = " + fmt(at_two_thirds_pi) + " not within 1e-15 of 0");
  if (formula_m != 1.0) p.push_back("partition minimum " + fmt(formula_m) + ", want 1");

  // probe 2: example 2.19 running minimum vs its closed-form radius 0.1
  const auto rows = running_min_series(example_dependent_triple(), {1e2, 1e3, 1e4, 1e5}, 1e-3);
  const double observed = rows.back().second;
  if (!(observed < 0.09))
    p.push_back("running min " + fmt(observed) + " did not fall below 0.09");

  std::printf("      probe: moduli {1,1,1} freqs {1,2,3}: partition m = %s but |f(2pi/3)| = %s\n",
              fmt(formula_m).c_str(), fmt(std::sqrt(at_two_thirds_pi)).c_str());
  std::printf("      probe: example 2.19: closed-form radius 0.1 but running min over [0,1e5] = %s\n",
              fmt(observed).c_str());
  std::printf("      probe verdict: closed-form inner radius numerically contradicted in the dependent case\n");
}

void criterion_cli_determinism(Problems& p) {
  const std::vector<std::string> commands = {
      "partition --weights 5,5,6,7,9 --method mim",
      "analyze --example 2.19 --window 50 --step 0.001 --refine",
      "curve --figure 3 --format csv --out acc_tmp_fig3.csv",
      "converge --series geometric:0.5,0.5 --nmax 10",
      "kronecker --freqs '[{\"kind\":\"sqrt\",\"radicand\":1},{\"kind\":\"sqrt\",\"radicand\":2}]'"
      " --targets 0,3.141592653589793 --delta 0.05 --window 10000",
  };
  for (const std::string& cmd : commands) {
    std::string first;
    std::string first_file;
    for (const char* env : {"APRING_THREADS=1", "APRING_THREADS=1", "APRING_THREADS=4"}) {
      int code = 0;
      const std::string out = run_cli(cmd, env, &code);
      if (code != 0) {
        p.push_back("exit " + std::to_string(code) + " from: " + cmd);
        return;
      }
      const std::string file =
          cmd.find("acc_tmp_fig3.csv") != std::string::npos ? read_file("acc_tmp_fig3.csv") : "";
      if (first.empty()) {
        first = out;
        first_file = file;
      } else if (out != first || file != first_file) {
        p.push_back("nondeterministic output from: " + cmd + " (" + env + ")");
        return;
      }
    }
  }
  std::remove("acc_tmp_fig3.csv");
}

void criterion_golden_figures(Problems& p) {
  for (int fig = 1; fig <= 4; ++fig) {
    for (const std::string format : {"svg", "csv"}) {
      const std::string tmp = "acc_tmp_fig" + std::to_string(fig) + "." + format;
      int code = 0;
      run_cli("curve --figure " + std::to_string(fig) + " --format " + format + " --out " + tmp,
              "", &code);
      if (code != 0) {
        p.push_back("curve --figure " + std::to_string(fig) + " exited " + std::to_string(code));
        return;
      }
      const std::string got = read_file(tmp);
      const std::string want =
          read_file(std::string(APRING_GOLDEN_DIR) + "/fig" + std::to_string(fig) + "." + format);
      if (want.empty()) {
        p.push_back("golden file missing for fig" + std::to_string(fig) + "." + format);
        return;
      }
      if (got != want) {
        p.push_back("fig" + std::to_string(fig) + "." + format + " deviates from the golden copy");
        return;
      }
      std::remove(tmp.c_str());
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "partition exactness on {5,5,6,7,9}", 10.0, criterion_partition_exactness},
      {2, "closed forms match brute force (n=3,4)", 1000.0, criterion_closed_forms},
      {3, "karmarkar-karp exact through n=4", 1000.0, criterion_kk_small_exact},
      {4, "formula radii of the bundled examples", 10.0, criterion_radii_formulas},
      {5, "scans attain the reachable extrema", 5000.0, criterion_scan_attainment},
      {6, "scan soundness and monotonicity envelope", 60000.0, criterion_scan_soundness},
      {7, "kronecker certificate bound", 5000.0, criterion_kronecker_certificate},
      {8, "ring coverage of the independent pair", 30000.0, criterion_ring_coverage},
      {9, "limit-theorem sequence behaviour", 30000.0, criterion_limit_theorem},
      {10, "dependent-frequency claim probe", 60000.0, criterion_claim_probe},
      {11, "cli determinism across runs and threads", 30000.0, criterion_cli_determinism},
      {12, "golden figure files", 10000.0, criterion_golden_figures},
  };

  int failed = 0;
  for (Criterion& c : criteria) {
    Problems problems;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > c.budget_ms)
      problems.push_back("runtime " + fmt(ms) + " ms exceeded budget " + fmt(c.budget_ms) + " ms");
    const bool pass = problems.empty();
    std::printf("[%2d] %s  %-48s %9.1f ms (budget %.0f ms)\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), ms, c.budget_ms);
    for (const std::string& msg : problems) std::printf("      - %s\n", msg.c_str());
    if (!pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
