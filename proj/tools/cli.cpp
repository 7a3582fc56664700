#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "momo/algorithms.hpp"
#include "momo/error.hpp"
#include "momo/harness.hpp"
#include "momo/oracle.hpp"
#include "momo/plot.hpp"

namespace momo::cli {
namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return value;
}

// Flags shared by `run` and `sweep`; the config file keys mirror them.
struct ExperimentFlags {
  std::vector<std::string> algos{"gsemo"};
  std::string problem = "ojzj";
  std::string n = "10";
  std::size_t k = 4;
  double beta = kDefaultBeta;
  std::string R = "n";
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::string budget = "n^(k+3)";
  bool accept_indifferent = false;
  std::string out;
  std::size_t workers = 0;
  std::string preset;

  CLI::Option* algo_opt = nullptr;
  CLI::Option* problem_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* R_opt = nullptr;
  CLI::Option* runs_opt = nullptr;
  CLI::Option* budget_opt = nullptr;

  void attach(CLI::App& app, bool list_algos) {
    algo_opt = app.add_option("--algo", algos,
                              list_algos ? "Algorithms (comma separated): semo, gsemo, gsemo-htm, sd-gsemo, sd-gsemo-ind"
                                         : "Algorithm: semo, gsemo, gsemo-htm, sd-gsemo, sd-gsemo-ind");
    if (list_algos) algo_opt->delimiter(',');
    problem_opt = app.add_option("--problem", problem, "Problem: ojzj, zplg, spg, decobj");
    n_opt = app.add_option("--n", n, list_algos ? "Problem size or start:step:stop" : "Problem size");
    k_opt = app.add_option("--k", k, "Jump size (ojzj)");
    beta_opt = app.add_option("--beta", beta, "Power-law exponent for gsemo-htm");
    R_opt = app.add_option("--R", R, "Stagnation-detection safety parameter, integer or 'n'");
    runs_opt = app.add_option("--runs", runs, "Independent runs per cell");
    app.add_option("--seed", seed, "Master seed");
    budget_opt = app.add_option("--budget", budget, "Evaluation budget, integer or 'n^(k+3)'");
    app.add_flag("--accept-indifferent", accept_indifferent, "Let equal-valued offspring replace members");
    app.add_option("--out", out, "Output directory for runs.csv and stats.csv");
    app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
  }

  ExperimentSpec to_spec() const {
    ExperimentSpec spec;
    if (!preset.empty()) spec = ExperimentSpec::preset(preset);
    const bool use_preset = !preset.empty();
    const auto given = [&](const CLI::Option* o) { return !use_preset || o->count() > 0; };

    if (given(algo_opt)) {
      spec.algorithms.clear();
      for (const auto& a : algos) spec.algorithms.push_back(parse_algorithm_kind(a));
    }
    if (given(problem_opt)) spec.problem = parse_problem_kind(problem);
    if (given(n_opt)) spec.n_values = parse_n_values(n);
    if (given(k_opt)) spec.k = k;
    if (given(beta_opt)) spec.beta = beta;
    if (given(R_opt)) spec.R = R == "n" ? std::nullopt : std::optional(parse_u64(R, "R"));
    if (given(runs_opt)) spec.runs = runs;
    if (given(budget_opt)) {
      spec.budget = budget == "n^(k+3)" ? std::nullopt : std::optional(parse_u64(budget, "budget"));
    }
    spec.master_seed = seed;
    spec.accept_indifferent = accept_indifferent;
    spec.workers = workers;
    return spec;
  }
};

// Flat key=value file whose keys are the sweep flag names without dashes.
// Options already given on the command line keep their command-line value.
void apply_config_file(CLI::App& cmd, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path.string() + ": expected key=value", line_no);
    const auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(" \t\r");
      const auto e = t.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") throw UsageError(path.string() + ": config files cannot include other config files");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw UsageError(path.string() + " line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void report_budget_hits(const ExperimentResult& result, std::ostream& err) {
  for (const auto& row : result.rows) {
    if (!row.covered_all) {
      err << "warning: " << to_string(row.algorithm) << " n=" << row.n
          << " had runs that stopped at the budget without covering the front\n";
    }
  }
}

int do_run(const ExperimentFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.algos.size() != 1) throw UsageError("run takes exactly one --algo");
  const AlgorithmKind kind = parse_algorithm_kind(flags.algos.front());
  if (flags.beta_opt->count() > 0 && !uses_beta(kind)) {
    throw UsageError("--beta applies only to gsemo-htm");
  }
  if (flags.R_opt->count() > 0 && !uses_safety(kind)) {
    throw UsageError("--R applies only to sd-gsemo and sd-gsemo-ind");
  }
  ExperimentSpec spec = flags.to_spec();
  if (spec.n_values.size() != 1) throw UsageError("run takes a single --n value; use sweep for ranges");
  const ExperimentResult result = run_experiment(spec);
  out << runs_csv(result.runs) << '\n' << stats_csv(result.rows);
  if (!flags.out.empty()) emit_csv(result, flags.out);
  report_budget_hits(result, err);
  return kOk;
}

int do_sweep(const ExperimentFlags& flags, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = flags.to_spec();
  const std::string dir = flags.out.empty() ? "results" : flags.out;
  std::size_t last_percent = 0;
  const ExperimentResult result = run_experiment(spec, [&](std::size_t done, std::size_t total) {
    const std::size_t percent = done * 100 / total;
    if (percent >= last_percent + 10 || done == total) {
      last_percent = percent;
      err << "progress: " << done << '/' << total << " runs\n";
    }
  });
  emit_csv(result, dir);
  out << stats_csv(result.rows);
  report_budget_hits(result, err);
  return kOk;
}

void print_front(std::ostream& out, const ParetoFront& front) {
  for (const auto& v : front.values()) out << v.f1 << ' ' << v.f2 << '\n';
}

int do_front(const std::string& problem_name, std::size_t n, std::size_t k, bool values_only,
             std::ostream& out) {
  const ProblemKind kind = parse_problem_kind(problem_name);
  const auto problem = ProblemInstance::make(kind, n, kind == ProblemKind::OneJumpZeroJump ? k : 0);
  const FrontReport report = brute_force_front(problem);
  if (values_only) {
    print_front(out, report.pareto_front);
    return kOk;
  }
  out << "# brute-force front (" << to_string(kind) << " n=" << n;
  if (problem.has_jump_size()) out << " k=" << k;
  out << ", " << report.pareto_masks.size() << " Pareto-optimal points)\n";
  print_front(out, report.pareto_front);
  if (!problem.has_jump_size()) return kOk;

  const ParetoFront analytic = analytic_front(problem);
  out << "# analytic front\n";
  print_front(out, analytic);
  const bool front_ok = analytic == report.pareto_front;
  const bool set_ok = analytic_pareto_masks(n, k) == report.pareto_masks;
  out << "# front " << (front_ok ? "matches" : "MISMATCH") << ", Pareto set "
      << (set_ok ? "matches" : "MISMATCH") << '\n';
  return front_ok && set_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-objective evolutionary algorithms on multimodal pseudo-Boolean benchmarks", "momo"};
  app.require_subcommand(1);

  ExperimentFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one problem size");
  run_flags.attach(*run_cmd, false);

  ExperimentFlags sweep_flags;
  sweep_flags.runs = 20;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment grid and write CSV results");
  sweep_flags.attach(*sweep_cmd, true);
  sweep_cmd->add_option("--preset", sweep_flags.preset, "fig3 or fig3-desk; explicit flags override");
  std::string config_path;
  sweep_cmd->add_option("--config", config_path, "Flat key=value file mirroring the flags; flags override it");

  std::string front_problem = "ojzj";
  std::size_t front_n = 6, front_k = 2;
  bool values_only = false;
  auto* front_cmd = app.add_subcommand("front", "Print brute-force and closed-form Pareto fronts");
  front_cmd->add_option("--problem", front_problem, "Problem: ojzj, zplg, spg, decobj");
  front_cmd->add_option("--n", front_n, "Problem size (<= 24)");
  front_cmd->add_option("--k", front_k, "Jump size (ojzj)");
  front_cmd->add_flag("--values-only", values_only, "Print only the sorted brute-force front values");

  std::string plot_in, plot_out;
  double plot_beta = kDefaultBeta;
  auto* plot_cmd = app.add_subcommand("plot", "Render a stats CSV as an SVG chart");
  plot_cmd->add_option("--in", plot_in, "stats.csv produced by sweep")->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG path")->required();
  plot_cmd->add_option("--beta", plot_beta, "Exponent used for the heavy-tailed reference curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return do_run(run_flags, out, err);
    if (*sweep_cmd) {
      if (!config_path.empty()) apply_config_file(*sweep_cmd, config_path);
      return do_sweep(sweep_flags, out, err);
    }
    if (*front_cmd) return do_front(front_problem, front_n, front_k, values_only, out);
    if (*plot_cmd) {
      emit_plot(plot_in, plot_out, plot_beta);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace momo::cli
