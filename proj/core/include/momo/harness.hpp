#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momo/algorithms.hpp"
#include "momo/objectives.hpp"

namespace momo {

// Parses "10" or "start:step:stop" (inclusive stop). Throws UsageError.
std::vector<std::size_t> parse_n_values(std::string_view text);

struct ExperimentSpec {
  std::vector<AlgorithmKind> algorithms;
  ProblemKind problem = ProblemKind::OneJumpZeroJump;
  std::vector<std::size_t> n_values;
  std::size_t k = 4;                      // ignored unless problem is ojzj
  double beta = kDefaultBeta;             // gsemo-htm cells
  std::optional<std::uint64_t> R;         // nullopt: R = n of each cell
  std::size_t runs = 20;
  std::uint64_t master_seed = 1;
  std::optional<std::uint64_t> budget;    // nullopt: n^(k+3) per cell
  bool accept_indifferent = false;
  std::size_t workers = 0;                // 0: hardware concurrency

  // Throws UsageError when runs is zero, a list is empty, or some n is
  // invalid for the problem kind.
  void validate() const;

  // "fig3": four algorithms, ojzj, k=4, n=10:4:50, beta 1.5, R=n, 20 runs.
  // "fig3-desk": same with n=10:4:18.
  static ExperimentSpec preset(std::string_view name);
};

ProblemInstance cell_instance(const ExperimentSpec& spec, std::size_t n);
AlgorithmConfig cell_config(const ExperimentSpec& spec, AlgorithmKind kind, std::size_t n);

struct RunRecord {
  AlgorithmKind algorithm = AlgorithmKind::Gsemo;
  ProblemInstance problem;
  std::optional<double> beta;
  std::optional<std::uint64_t> R;
  std::uint64_t run_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  bool covered = false;
};

struct StatsRow {
  AlgorithmKind algorithm = AlgorithmKind::Gsemo;
  std::size_t n = 0;
  std::size_t k = 0;
  double mean = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::size_t runs = 0;
  bool covered_all = false;
  std::optional<double> ref_curve;
};

struct ExperimentResult {
  std::vector<StatsRow> rows;    // ordered by (algorithm as listed, n as listed)
  std::vector<RunRecord> runs;   // same order, then run index
};

// Sorted-sample linear interpolation at positions p*(m-1), p in {1/4, 3/4}.
// Throws UsageError for an empty sample.
std::pair<double, double> quartiles(std::span<const double> samples);

struct ReferenceCurves {
  double gsemo = 0.0;  // 1.5 e (n-2k) n^k
  double htm = 0.0;    // (n-2k) (en)^k k^(beta-0.5) / k^k; beta=1.5 gives (n-2k)(en)^k / k^(k-1)
  double sd = 0.0;     // 1.5 (n-2k) (en)^k / k^k
};

ReferenceCurves reference_curves(std::size_t n, std::size_t k, double beta = kDefaultBeta);
std::optional<double> reference_for(AlgorithmKind kind, const ReferenceCurves& curves) noexcept;

StatsRow summarize(AlgorithmKind kind, const ProblemInstance& problem, double beta,
                   std::span<const RunRecord> runs);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

// Runs every (algorithm, n, run index) task on a pool of workers. Results are
// keyed by task index, so the output does not depend on the worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, const ProgressCallback& progress = {});

std::string format_double(double value);
std::string runs_csv(std::span<const RunRecord> runs);
std::string stats_csv(std::span<const StatsRow> rows);

// Writes <dir>/runs.csv and <dir>/stats.csv, creating dir if needed.
// Throws IoError naming the path on failure.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace momo
