#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apring/apring.hpp"
#include "apring/spec_json.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  if (!ifs) throw apring::SpecParseError("cannot read " + path);
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Inline comma list or a file with one number per line / one comma line.
apring::WeightSet parse_weights(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg))
    text = read_file(arg);
  apring::WeightSet w;
  for (const std::string& token : split_list(text)) {
    w.weights.push_back(apring::parse_double(token));
    w.decimals.push_back(token);
  }
  if (w.weights.empty()) throw apring::SpecParseError("no weights in '" + arg + "'");
  return w;
}

std::vector<double> parse_double_list(const std::string& arg) {
  std::vector<double> out;
  for (const std::string& token : split_list(arg)) out.push_back(apring::parse_double(token));
  if (out.empty()) throw apring::SpecParseError("expected a number list, got '" + arg + "'");
  return out;
}

apring::TrigPolynomial load_polynomial(const std::string& spec_path,
                                       const std::string& example_key, double a_param) {
  if (!spec_path.empty() && !example_key.empty())
    throw apring::SpecParseError("--spec and --example are mutually exclusive");
  if (!spec_path.empty()) {
    nlohmann::json spec;
    try {
      spec = nlohmann::json::parse(read_file(spec_path));
    } catch (const nlohmann::json::exception& e) {
      throw apring::SpecParseError(std::string("bad spec json: ") + e.what());
    }
    return apring::parse_polynomial_spec(spec);
  }
  if (!example_key.empty()) return apring::example_by_key(example_key, a_param);
  throw apring::SpecParseError("need --spec <json> or --example <key>");
}

apring::CoefficientSeries parse_series(const std::string& arg) {
  const std::size_t colon = arg.find(':');
  if (colon == std::string::npos)
    throw apring::SpecParseError("series must look like kind:args, got '" + arg + "'");
  const std::string kind = arg.substr(0, colon);
  const std::string rest = arg.substr(colon + 1);
  if (kind == "geometric") {
    const std::vector<double> v = parse_double_list(rest);
    if (v.size() != 2) throw apring::SpecParseError("geometric needs a,r");
    return apring::CoefficientSeries::geometric(v[0], v[1]);
  }
  if (kind == "powerlaw") {
    const std::vector<double> v = parse_double_list(rest);
    if (v.size() != 2) throw apring::SpecParseError("powerlaw needs p,scale");
    return apring::CoefficientSeries::power_law(v[0], v[1]);
  }
  if (kind == "explicit")
    return apring::CoefficientSeries::explicit_list(parse_double_list(rest));
  throw apring::SpecParseError("series kind must be geometric, powerlaw or explicit");
}

ordered_json scan_json(const apring::ScanReport& r) {
  ordered_json out;
  out["x_lo"] = r.x_lo;
  out["x_hi"] = r.x_hi;
  out["step"] = r.step;
  out["min_val"] = r.min_val;
  out["argmin"] = r.argmin;
  out["max_val"] = r.max_val;
  out["argmax"] = r.argmax;
  out["refined"] = r.refined;
  out["evaluations"] = r.evaluations;
  return out;
}

int exit_code_for(const apring::Error& e) {
  switch (e.kind()) {
    case apring::ErrorKind::Parse: return 2;
    case apring::ErrorKind::Numeric: return 3;
    case apring::ErrorKind::Io: return 4;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyzer for almost periodic trigonometric polynomials"};
  app.set_version_flag("--version", std::string("apring ") + apring::kVersion);
  bool timing = false;
  app.add_flag("--timing", timing, "include elapsed_ms in the result envelope");
  app.require_subcommand(1);

  std::string command;
  ordered_json inputs;
  std::function<ordered_json()> run;

  // partition
  std::string pt_weights, pt_method = "auto";
  long long pt_scale = 1;
  {
    CLI::App* cmd = app.add_subcommand("partition", "minimum |sum of +/- weights|");
    cmd->add_option("--weights", pt_weights, "inline comma list or csv file")->required();
    cmd->add_option("--method", pt_method, "auto|brute|mim|dp|kk|closed")
        ->check(CLI::IsMember({"auto", "brute", "mim", "dp", "kk", "closed"}));
    cmd->add_option("--scale", pt_scale, "integer scale for dp");
    cmd->callback([&] {
      command = "partition";
      run = [&]() {
        const apring::WeightSet w = parse_weights(pt_weights);
        inputs["weights"] = w.weights;
        inputs["method"] = pt_method;
        inputs["scale"] = pt_scale;
        std::optional<apring::Method> forced;
        if (pt_method == "brute") forced = apring::Method::BruteForce;
        else if (pt_method == "mim") forced = apring::Method::MeetInMiddle;
        else if (pt_method == "dp") forced = apring::Method::IntegerDP;
        else if (pt_method == "kk") forced = apring::Method::KarmarkarKarp;
        else if (pt_method == "closed") forced = apring::Method::ClosedForm;
        const apring::PartitionResult res = apring::solve_partition(w, forced, pt_scale);
        ordered_json out;
        out["m"] = res.m;
        out["signs"] = res.signs.signs;
        out["method"] = apring::method_name(res.method);
        return out;
      };
    });
  }

  // analyze
  std::string an_spec, an_example, an_schedule;
  double an_a = -1.0, an_window = 0.0, an_step = 0.0;
  bool an_refine = false;
  {
    CLI::App* cmd = app.add_subcommand("analyze", "formula radii, independence and window scan");
    cmd->add_option("--spec", an_spec, "polynomial spec json file");
    cmd->add_option("--example", an_example, "bundled example key (2.8|2.9|2.16|2.19|3.9)");
    cmd->add_option("--a", an_a, "amplitude parameter for 2.16 / 3.9");
    cmd->add_option("--window", an_window, "scan window [0, T]")->required();
    cmd->add_option("--step", an_step, "scan grid step")->required();
    cmd->add_flag("--refine", an_refine, "refine grid extrema");
    cmd->add_option("--schedule", an_schedule, "running-min windows T1,T2,...");
    cmd->callback([&] {
      command = "analyze";
      run = [&]() {
        const apring::TrigPolynomial f = load_polynomial(an_spec, an_example, an_a);
        inputs["spec"] = an_spec.empty() ? ordered_json(nullptr) : ordered_json(an_spec);
        inputs["example"] = an_example.empty() ? ordered_json(nullptr) : ordered_json(an_example);
        inputs["a"] = an_a;
        inputs["window"] = an_window;
        inputs["step"] = an_step;
        inputs["refine"] = an_refine;
        inputs["polynomial"] = apring::polynomial_spec_json(f);
        const apring::ExtremaFormulas radii = apring::radii_formulas(f);
        const apring::ScanReport scan =
            apring::scan_extrema(f, 0.0, an_window, an_step, an_refine);
        ordered_json out;
        ordered_json formulas;
        formulas["M"] = radii.big_m;
        formulas["m"] = radii.small_m;
        out["formulas"] = formulas;
        out["independence"] =
            apring::independence_name(apring::classify_independence(f.frequencies()));
        out["scan"] = scan_json(scan);
        if (!an_schedule.empty()) {
          const std::vector<double> ts = parse_double_list(an_schedule);
          const auto rows = apring::running_min_series(f, ts, an_step);
          ordered_json sched = ordered_json::array();
          for (const auto& [t, v] : rows) {
            ordered_json row;
            row["T"] = t;
            row["min_val"] = v;
            sched.push_back(row);
          }
          out["schedule"] = sched;
        }
        return out;
      };
    });
  }

  // curve
  int cv_figure = 0;
  std::string cv_spec, cv_format, cv_out;
  double cv_tmax = 0.0, cv_tstep = 0.0;
  {
    CLI::App* cmd = app.add_subcommand("curve", "emit the parametric curve as svg or csv");
    cmd->add_option("--figure", cv_figure, "bundled figure preset 1..4")->check(CLI::Range(1, 4));
    cmd->add_option("--spec", cv_spec, "polynomial spec json file");
    cmd->add_option("--tmax", cv_tmax, "parameter range end");
    cmd->add_option("--tstep", cv_tstep, "parameter step");
    cmd->add_option("--format", cv_format, "svg|csv")
        ->required()
        ->check(CLI::IsMember({"svg", "csv"}));
    cmd->add_option("--out", cv_out, "output path")->required();
    cmd->callback([&] {
      command = "curve";
      run = [&]() {
        apring::TrigPolynomial f = apring::example_pair_sqrt2();
        double t_max = cv_tmax, t_step = cv_tstep;
        std::string source;
        if (cv_figure > 0) {
          if (!cv_spec.empty())
            throw apring::SpecParseError("--figure and --spec are mutually exclusive");
          const apring::FigurePreset preset = apring::figure_preset(cv_figure);
          f = apring::example_by_key(preset.example_key, preset.a);
          t_max = preset.t_max;
          t_step = preset.step;
          source = "figure" + std::to_string(cv_figure);
        } else {
          f = load_polynomial(cv_spec, "", -1.0);
          if (!(t_max > 0.0) || !(t_step > 0.0))
            throw apring::SpecParseError("--spec needs --tmax and --tstep");
          source = cv_spec;
        }
        inputs["figure"] = cv_figure;
        inputs["spec"] = cv_spec.empty() ? ordered_json(nullptr) : ordered_json(cv_spec);
        inputs["tmax"] = t_max;
        inputs["tstep"] = t_step;
        inputs["format"] = cv_format;
        inputs["out"] = cv_out;
        const apring::CurveSamples samples = apring::sample_curve(f, t_max, t_step, source);
        if (cv_format == "svg")
          apring::emit_svg(samples, std::filesystem::path(cv_out));
        else
          apring::emit_csv(samples, std::filesystem::path(cv_out));
        ordered_json out;
        out["samples"] = samples.rows.size();
        out["path"] = cv_out;
        out["format"] = cv_format;
        return out;
      };
    });
  }

  // converge
  std::string cg_series;
  int cg_nmax = 0;
  {
    CLI::App* cmd = app.add_subcommand("converge", "partition minima of series truncations");
    cmd->add_option("--series", cg_series, "geometric:a,r | powerlaw:p,scale | explicit:w1,w2,...")
        ->required();
    cmd->add_option("--nmax", cg_nmax, "largest truncation length")
        ->required()
        ->check(CLI::Range(1, 40));
    cmd->callback([&] {
      command = "converge";
      run = [&]() {
        inputs["series"] = cg_series;
        inputs["nmax"] = cg_nmax;
        const apring::CoefficientSeries s = parse_series(cg_series);
        const std::vector<apring::ConvergenceRow> rows =
            apring::mn_sequence(s, static_cast<std::size_t>(cg_nmax));
        ordered_json jrows = ordered_json::array();
        std::string table = "n,m_n,tail\n";
        for (const apring::ConvergenceRow& row : rows) {
          ordered_json jr;
          jr["n"] = row.n;
          jr["m_n"] = row.m_n;
          jr["tail"] = row.tail;
          jr["tail_half_width"] = row.tail_half_width;
          jrows.push_back(jr);
          table += std::to_string(row.n) + "," + apring::format_double(row.m_n) + "," +
                   apring::format_double(row.tail) + "\n";
        }
        ordered_json out;
        out["rows"] = jrows;
        out["table"] = table;
        out["cauchy_check"] = apring::cauchy_check(rows, s);
        return out;
      };
    });
  }

  // kronecker
  std::string kr_freqs, kr_targets;
  double kr_delta = 0.0, kr_window = 0.0;
  {
    CLI::App* cmd = app.add_subcommand("kronecker", "simultaneous phase alignment search");
    cmd->add_option("--freqs", kr_freqs, "json list of frequency objects")->required();
    cmd->add_option("--targets", kr_targets, "target phases t1,t2,... (radians)")->required();
    cmd->add_option("--delta", kr_delta, "tolerance in (0, pi]")->required();
    cmd->add_option("--window", kr_window, "search window [0, T]")->required();
    cmd->callback([&] {
      command = "kronecker";
      run = [&]() {
        inputs["freqs"] = kr_freqs;
        inputs["targets"] = kr_targets;
        inputs["delta"] = kr_delta;
        inputs["window"] = kr_window;
        apring::KroneckerQuery q;
        nlohmann::json freqs;
        try {
          freqs = nlohmann::json::parse(kr_freqs);
        } catch (const nlohmann::json::exception& e) {
          throw apring::SpecParseError(std::string("bad freqs json: ") + e.what());
        }
        if (!freqs.is_array()) throw apring::SpecParseError("--freqs must be a json array");
        for (const nlohmann::json& fj : freqs)
          q.frequencies.push_back(apring::parse_frequency_json(fj));
        q.targets = parse_double_list(kr_targets);
        q.delta = kr_delta;
        q.window = kr_window;
        const std::optional<double> tau = apring::kronecker_search(q);
        ordered_json out;
        out["found"] = tau.has_value();
        if (tau) {
          out["tau"] = *tau;
          out["max_distance"] = apring::kronecker_max_distance(q, *tau);
          out["satisfied"] = apring::kronecker_satisfied(q, *tau);
        } else {
          out["tau"] = "none";
        }
        out["delta"] = kr_delta;
        return out;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const ordered_json outputs = run();
    ordered_json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["outputs"] = outputs;
    envelope["tool_version"] = apring::kVersion;
    if (timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      envelope["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::cout << envelope.dump(2) << "\n";
    return 0;
  } catch (const apring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
