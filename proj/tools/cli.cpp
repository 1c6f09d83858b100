#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lorenz/lorenz.hpp"

namespace lorenz::cli {

namespace {

constexpr std::uint64_t kFallbackSeed = 20240601;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LORENZ_LAB_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kFallbackSeed;
}

std::string fmt(double v, int digits = 10) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Globals {
  std::string income_col = "income";
  std::string weight_col;
  std::optional<double> tol;
  bool json = false;
};

Dataset load(const std::string& path, const Globals& g) {
  std::optional<std::string> w;
  if (!g.weight_col.empty()) w = g.weight_col;
  return ingest_csv(path, g.income_col, w);
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& out) {
  if (path.empty() || path == "-") return out;
  file.open(path, std::ios::binary);
  if (!file) fail(ErrorCode::IoError, "cannot write " + path);
  return file;
}

void print_record(std::ostream& out, const IndexRecord& r) {
  out << r.first << " vs " << r.second << "\n"
      << "  gini1  " << fmt(r.raw.gini1) << "\n"
      << "  gini2  " << fmt(r.raw.gini2) << "\n"
      << "  dL     " << fmt(r.raw.distance) << "\n"
      << "  I      (" << fmt(r.raw.delta_x) << ", " << fmt(r.raw.distance) << ")\n"
      << "  Istar  (" << fmt(r.star.x) << ", " << fmt(r.star.y) << ")\n"
      << "  Iupper (" << fmt(r.upper.x) << ", " << fmt(r.upper.y) << ")\n"
      << "  class  " << to_string(r.frontier) << " (tol " << fmt(r.tolerance, 4) << ")\n";
}

std::string margin_line(const char* name, const MarginStats& m) {
  return std::string(name) + ": mean " + fmt(m.mean, 6) + ", sd " + fmt(m.sd, 6) + ", skewness " +
         fmt(m.skewness, 4) + ", excess kurtosis " + fmt(m.excess_kurtosis, 4) +
         (m.normal_compatible ? " (normal-compatible)" : " (not normal-compatible)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorenz curve geometry, bidimensional inequality indices and GB2 simulation",
               "lorenz"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--income-col", g.income_col, "Income column name")
      ->capture_default_str();
  app.add_option("--weight-col", g.weight_col, "Weight column name (unit weights if omitted)");
  app.add_option("--tol", g.tol, "Frontier tolerance (default 1/sqrt(min(n1, n2)))")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "Print JSON instead of text");

  const std::uint64_t seed_default = default_seed();

  // gini
  std::string gini_file;
  auto* gini_cmd = app.add_subcommand("gini", "Gini index of an income file");
  gini_cmd->add_option("FILE", gini_file, "CSV file")->required();

  // index
  std::string index_a;
  std::string index_b;
  auto* index_cmd = app.add_subcommand("index", "Indices of a pair of income files");
  index_cmd->add_option("FILE1", index_a, "First CSV file")->required();
  index_cmd->add_option("FILE2", index_b, "Second CSV file")->required();

  // compare
  std::string baseline;
  std::vector<std::string> targets;
  std::string compare_out;
  auto* compare_cmd = app.add_subcommand("compare", "Compare a baseline file with targets");
  compare_cmd->add_option("--baseline", baseline, "Baseline CSV file")->required();
  compare_cmd->add_option("--targets", targets, "Target CSV files")->required();
  compare_cmd->add_option("-o,--output", compare_out, "Write the run JSON here");

  // simulate
  int sim_model = 0;
  std::size_t sim_n = 0;
  std::size_t sim_reps = 0;
  std::uint64_t sim_seed = seed_default;
  std::string sim_out;
  bool sim_diag = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo replications of the estimator");
  sim_cmd->add_option("--model", sim_model, "Model preset 1..5")->required();
  sim_cmd->add_option("--n", sim_n, "Sample size per variable")->required()->check(
      CLI::PositiveNumber);
  sim_cmd->add_option("--reps", sim_reps, "Replications")->required()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim_seed, "Master seed (default LORENZ_LAB_SEED)");
  sim_cmd->add_option("-o,--output", sim_out, "CSV output (stdout if omitted)");
  sim_cmd->add_flag("--diagnostics", sim_diag, "Print normality diagnostics to stderr");

  // limit
  int lim_model = 0;
  std::size_t lim_draws = 0;
  std::uint64_t lim_seed = seed_default;
  std::size_t lim_grid = kDefaultGridSize;
  double lim_lambda = 0.5;
  std::string lim_out;
  std::string lim_diag;
  bool lim_normalized = false;
  auto* lim_cmd = app.add_subcommand("limit", "Draws from the limit law of the normalized index");
  lim_cmd->add_option("--model", lim_model, "Model preset 1..5")->required();
  lim_cmd->add_option("--draws", lim_draws, "Number of draws")->required()->check(
      CLI::PositiveNumber);
  lim_cmd->add_option("--seed", lim_seed, "Master seed (default LORENZ_LAB_SEED)");
  lim_cmd->add_option("--grid", lim_grid, "Time grid size, a power of two")->capture_default_str();
  lim_cmd->add_option("--lambda", lim_lambda, "Limiting share n1/(n1+n2)")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  lim_cmd->add_option("-o,--output", lim_out, "CSV output (stdout if omitted)");
  lim_cmd->add_option("--diagnostics", lim_diag, "Write normality diagnostics JSON here");
  lim_cmd->add_flag("--normalized", lim_normalized,
                    "Add limit draws of the star and upper-star indices");

  // extremal
  double ext_a = 0.0;
  double ext_b = 0.0;
  int ext_grid = 0;
  auto* ext_cmd = app.add_subcommand("extremal", "Maximal Lorenz distance for given Ginis");
  ext_cmd->add_option("--a", ext_a, "Gini of the first curve")->required()->check(
      CLI::Range(0.0, 1.0));
  ext_cmd->add_option("--b", ext_b, "Gini of the second curve")->required()->check(
      CLI::Range(0.0, 1.0));
  ext_cmd->add_option("--oracle", ext_grid, "Also run the brute-force search on this grid")
      ->check(CLI::Range(2, 100000));

  // chart
  std::string chart_run;
  std::string chart_kind = "triangle";
  std::string chart_out;
  auto* chart_cmd = app.add_subcommand("chart", "Render a comparison run as SVG");
  chart_cmd->add_option("RUN", chart_run, "Run JSON written by compare")->required();
  chart_cmd->add_option("--kind", chart_kind, "triangle or delta")
      ->capture_default_str()
      ->check(CLI::IsMember({"triangle", "delta"}));
  chart_cmd->add_option("-o,--output", chart_out, "SVG output file")->required();

  // synth
  std::string synth_preset;
  std::string synth_dir;
  std::uint64_t synth_seed = seed_default;
  double synth_mean = 0.0;
  double synth_gini = 0.0;
  std::size_t synth_n = 0;
  std::string synth_out;
  double synth_q = 1.5;
  auto* synth_cmd = app.add_subcommand("synth", "Write synthetic survey-like CSV files");
  synth_cmd->add_option("--preset", synth_preset, "Summary table to reproduce")
      ->check(CLI::IsMember({"spain"}));
  synth_cmd->add_option("--out-dir", synth_dir, "Directory for the preset's files");
  synth_cmd->add_option("--mean", synth_mean, "Target weighted mean (single file)");
  synth_cmd->add_option("--gini", synth_gini, "Target Gini (single file)");
  synth_cmd->add_option("--n", synth_n, "Rows (single file)");
  synth_cmd->add_option("-o,--output", synth_out, "Output CSV (single file)");
  synth_cmd->add_option("--q", synth_q, "GB2 shape q of the calibrated law")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_seed, "Seed (default LORENZ_LAB_SEED)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*gini_cmd) {
      const Dataset d = load(gini_file, g);
      const DatasetSummary s = summarize(d);
      if (g.json) {
        nlohmann::ordered_json j;
        j["label"] = s.label;
        j["n"] = s.n;
        j["mean"] = s.mean;
        j["gini"] = s.gini;
        j["dropped_negative"] = s.dropped_negative;
        j["dropped_missing"] = s.dropped_missing;
        out << j.dump() << "\n";
      } else {
        out << s.label << ": gini " << fmt(s.gini) << ", mean " << fmt(s.mean) << ", n " << s.n;
        if (s.dropped_negative + s.dropped_missing > 0) {
          out << " (dropped " << s.dropped_negative << " negative, " << s.dropped_missing
              << " missing)";
        }
        out << "\n";
      }
    } else if (*index_cmd) {
      const IndexRecord r = compare_pair(load(index_a, g), load(index_b, g), g.tol);
      if (g.json) {
        out << to_json(r, 2) << "\n";
      } else {
        print_record(out, r);
      }
    } else if (*compare_cmd) {
      const Dataset base = load(baseline, g);
      std::vector<Dataset> ts;
      for (const std::string& t : targets) ts.push_back(load(t, g));
      const ComparisonRun run = run_comparison(base, ts, g.tol);
      if (!compare_out.empty()) {
        std::ofstream f(compare_out, std::ios::binary);
        if (!f) fail(ErrorCode::IoError, "cannot write " + compare_out);
        f << to_json(run) << "\n";
      }
      if (g.json) {
        out << to_json(run) << "\n";
      } else {
        for (const IndexRecord& r : run.results) print_record(out, r);
      }
    } else if (*sim_cmd) {
      const ModelPreset m = model_preset(sim_model);
      const auto stats = monte_carlo_estimator(m.first, m.second, sim_n, sim_reps, sim_seed);
      std::ofstream file;
      std::ostream& o = open_output(sim_out, file, out);
      o << "rep,comp1,comp2\n";
      for (std::size_t i = 0; i < stats.size(); ++i) {
        o << i << ',' << fmt(stats[i].delta_x, 17) << ',' << fmt(stats[i].distance, 17) << '\n';
      }
      if (sim_diag && stats.size() >= kMinDiagnosticDraws) {
        const NormalityReport r = normality_diagnostics(stats);
        err << margin_line("comp1", r.first) << "\n" << margin_line("comp2", r.second) << "\n";
      }
    } else if (*lim_cmd) {
      const ModelPreset m = model_preset(lim_model);
      const LimitSimulator sim(m.first, m.second, lim_lambda, lim_grid);
      const std::vector<LimitDraw> draws = sim.draws(lim_draws, lim_seed);
      const RawIndex truth = index_raw(lorenz_curve(m.first), lorenz_curve(m.second));
      std::ofstream file;
      std::ostream& o = open_output(lim_out, file, out);
      o << "draw,comp1,comp2";
      if (lim_normalized) o << ",star1,star2,upper1,upper2";
      o << '\n';
      for (std::size_t i = 0; i < draws.size(); ++i) {
        o << i << ',' << fmt(draws[i].comp1, 17) << ',' << fmt(draws[i].comp2, 17);
        if (lim_normalized) {
          const NormalizedLimit nl = push_forward(truth, draws[i]);
          o << ',' << fmt(nl.star.x, 17) << ',' << fmt(nl.star.y, 17) << ','
            << fmt(nl.upper.x, 17) << ',' << fmt(nl.upper.y, 17);
        }
        o << '\n';
      }
      if (!lim_diag.empty()) {
        const NormalityReport r = normality_diagnostics(draws);
        std::ofstream f(lim_diag, std::ios::binary);
        if (!f) fail(ErrorCode::IoError, "cannot write " + lim_diag);
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(r));
        j["zero_set_measure"] = sim.zero_set_measure();
        f << j.dump(2) << "\n";
      }
      if (sim.zero_set_measure() > 0.0) {
        err << "note: |l1 - l2| <= " << fmt(kDefaultZeroTolerance, 3) << " on a share "
            << fmt(sim.zero_set_measure(), 4) << " of the grid\n";
      }
    } else if (*ext_cmd) {
      const double value = max_distance(ext_a, ext_b);
      const ExtremeSpec p1{Family::L, ext_a, ext_a, 0.0};
      const ExtremeSpec p2{Family::L, ext_b, 0.0, 0.0};
      const ExtremeSpec q1{Family::L, ext_a, 0.0, 0.0};
      const ExtremeSpec q2{Family::L, ext_b, ext_b, 0.0};
      std::optional<BruteForceResult> oracle;
      if (ext_grid > 0) oracle = brute_force_max(ext_a, ext_b, ext_grid);
      if (g.json) {
        nlohmann::ordered_json j;
        j["a"] = ext_a;
        j["b"] = ext_b;
        j["max_distance"] = value;
        j["pairs"] = nlohmann::ordered_json::array(
            {nlohmann::ordered_json::array({describe(p1), describe(p2)}),
             nlohmann::ordered_json::array({describe(q1), describe(q2)})});
        if (oracle) {
          j["oracle"] = {{"grid", ext_grid},
                         {"value", oracle->value},
                         {"first", describe(oracle->first)},
                         {"second", describe(oracle->second)}};
        }
        out << j.dump() << "\n";
      } else {
        out << "M(a,b) = " << fmt(value, 12) << "\n"
            << "extremal pairs: " << describe(p1) << " with " << describe(p2) << "; "
            << describe(q1) << " with " << describe(q2) << "\n";
        if (oracle) {
          out << "oracle (grid " << ext_grid << "): " << fmt(oracle->value, 12) << " at "
              << describe(oracle->first) << " with " << describe(oracle->second) << "\n";
        }
      }
    } else if (*chart_cmd) {
      std::ifstream f(chart_run, std::ios::binary);
      if (!f) fail(ErrorCode::FileNotFound, "cannot open " + chart_run);
      std::stringstream ss;
      ss << f.rdbuf();
      const ComparisonRun run = run_from_json(ss.str());
      emit_chart(run, chart_kind == "delta" ? ChartKind::DeltaRegion : ChartKind::Triangle,
                 chart_out);
    } else if (*synth_cmd) {
      if (!synth_preset.empty()) {
        if (synth_dir.empty()) {
          err << "error: --preset needs --out-dir\n\n" << synth_cmd->help();
          return kUsageError;
        }
        for (const auto& p : write_synthetic_set(spain_summaries(), synth_dir, synth_seed)) {
          out << p.string() << "\n";
        }
      } else {
        if (synth_out.empty() || synth_n == 0 || synth_mean <= 0.0 || synth_gini <= 0.0) {
          err << "error: single-file synthesis needs --mean, --gini, --n and -o\n\n"
              << synth_cmd->help();
          return kUsageError;
        }
        const SurveySummary s{std::filesystem::path(synth_out).stem().string(), synth_mean,
                              synth_n, synth_gini};
        write_csv(synthesize(s, synth_seed, synth_q), synth_out);
        out << synth_out << "\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace lorenz::cli
