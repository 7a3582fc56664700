#include "momo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

#include "momo/error.hpp"

namespace momo {
namespace {

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw UsageError("expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::size_t> parse_n_values(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {parse_size(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw UsageError("n range must be start:step:stop");
  const std::size_t start = parse_size(text.substr(0, first));
  const std::size_t step = parse_size(text.substr(first + 1, second - first - 1));
  const std::size_t stop = parse_size(text.substr(second + 1));
  if (step == 0) throw UsageError("n range step must be positive");
  if (stop < start) throw UsageError("n range stop is below start");
  std::vector<std::size_t> values;
  for (std::size_t n = start; n <= stop; n += step) values.push_back(n);
  return values;
}

void ExperimentSpec::validate() const {
  if (algorithms.empty()) throw UsageError("experiment needs at least one algorithm");
  if (n_values.empty()) throw UsageError("experiment needs at least one n value");
  if (runs < 1) throw UsageError("runs must be at least 1");
  if (!(beta > 1.0)) throw UsageError("beta must exceed 1");
  if (R && *R < 1) throw UsageError("R must be at least 1");
  for (const std::size_t n : n_values) (void)cell_instance(*this, n);
}

ExperimentSpec ExperimentSpec::preset(std::string_view name) {
  ExperimentSpec spec;
  spec.algorithms = {AlgorithmKind::Gsemo, AlgorithmKind::GsemoHtm, AlgorithmKind::SdGsemo,
                     AlgorithmKind::SdGsemoInd};
  spec.problem = ProblemKind::OneJumpZeroJump;
  spec.k = 4;
  spec.beta = 1.5;
  spec.runs = 20;
  if (name == "fig3") {
    spec.n_values = parse_n_values("10:4:50");
  } else if (name == "fig3-desk") {
    spec.n_values = parse_n_values("10:4:18");
  } else {
    throw UsageError("unknown preset '" + std::string(name) + "' (expected fig3 or fig3-desk)");
  }
  return spec;
}

ProblemInstance cell_instance(const ExperimentSpec& spec, std::size_t n) {
  return ProblemInstance::make(spec.problem, n, spec.problem == ProblemKind::OneJumpZeroJump ? spec.k : 0);
}

AlgorithmConfig cell_config(const ExperimentSpec& spec, AlgorithmKind kind, std::size_t n) {
  const ProblemInstance inst = cell_instance(spec, n);
  AlgorithmConfig config;
  config.kind = kind;
  if (uses_beta(kind)) config.beta = spec.beta;
  if (uses_safety(kind)) config.R = spec.R.value_or(n);
  config.budget = spec.budget.value_or(default_budget(n, inst.has_jump_size() ? inst.k : 1));
  config.accept_indifferent = spec.accept_indifferent;
  return config;
}

std::pair<double, double> quartiles(std::span<const double> samples) {
  if (samples.empty()) throw UsageError("quartiles of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto at = [&](double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  return {at(0.25), at(0.75)};
}

ReferenceCurves reference_curves(std::size_t n, std::size_t k, double beta) {
  if (k > n / 2) throw UsageError("reference curves require k <= n/2");
  const double gap = static_cast<double>(n - 2 * k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double e = std::numbers::e;
  const double en_k = std::pow(e * nd, kd);
  ReferenceCurves c;
  c.gsemo = 1.5 * e * gap * std::pow(nd, kd);
  c.htm = gap * en_k * std::pow(kd, beta - 0.5) / std::pow(kd, kd);
  c.sd = 1.5 * gap * en_k / std::pow(kd, kd);
  return c;
}

std::optional<double> reference_for(AlgorithmKind kind, const ReferenceCurves& curves) noexcept {
  switch (kind) {
    case AlgorithmKind::Gsemo: return curves.gsemo;
    case AlgorithmKind::GsemoHtm: return curves.htm;
    case AlgorithmKind::SdGsemo:
    case AlgorithmKind::SdGsemoInd: return curves.sd;
    case AlgorithmKind::Semo: return std::nullopt;
  }
  return std::nullopt;
}

StatsRow summarize(AlgorithmKind kind, const ProblemInstance& problem, double beta,
                   std::span<const RunRecord> runs) {
  if (runs.empty()) throw UsageError("cannot summarize zero runs");
  std::vector<double> evals;
  evals.reserve(runs.size());
  bool covered_all = true;
  for (const auto& r : runs) {
    evals.push_back(static_cast<double>(r.evaluations));
    covered_all = covered_all && r.covered;
  }
  StatsRow row;
  row.algorithm = kind;
  row.n = problem.n;
  row.k = problem.k;
  row.runs = runs.size();
  row.mean = std::accumulate(evals.begin(), evals.end(), 0.0) / static_cast<double>(evals.size());
  std::tie(row.q1, row.q3) = quartiles(evals);
  row.covered_all = covered_all;
  if (problem.has_jump_size()) row.ref_curve = reference_for(kind, reference_curves(problem.n, problem.k, beta));
  return row;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const ProgressCallback& progress) {
  spec.validate();

  struct Cell {
    AlgorithmKind kind;
    AlgorithmConfig config;
    const Benchmark* benchmark;
  };
  std::vector<Benchmark> benchmarks;
  benchmarks.reserve(spec.n_values.size());
  for (const std::size_t n : spec.n_values) benchmarks.emplace_back(cell_instance(spec, n));

  std::vector<Cell> cells;
  for (const AlgorithmKind kind : spec.algorithms) {
    for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
      cells.push_back({kind, cell_config(spec, kind, spec.n_values[i]), &benchmarks[i]});
    }
  }

  const std::size_t total = cells.size() * spec.runs;
  std::vector<RunOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      const Cell& cell = cells[task / spec.runs];
      try {
        outcomes[task] = run(*cell.benchmark, cell.config, spec.master_seed, task % spec.runs);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
      const std::size_t done = finished.fetch_add(1) + 1;
      if (progress) {
        const std::lock_guard lock(failure_mutex);
        progress(done, total);
      }
    }
  };

  std::size_t workers = spec.workers != 0 ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(total, 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.runs.reserve(total);
  for (std::size_t task = 0; task < total; ++task) {
    const Cell& cell = cells[task / spec.runs];
    const RunOutcome& o = outcomes[task];
    result.runs.push_back(RunRecord{cell.kind, cell.benchmark->instance(), cell.config.beta, cell.config.R,
                                    task % spec.runs, o.seed, o.evaluations, o.covered});
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::span<const RunRecord> slice(result.runs.data() + c * spec.runs, spec.runs);
    result.rows.push_back(summarize(cells[c].kind, cells[c].benchmark->instance(), spec.beta, slice));
  }
  return result;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::string runs_csv(std::span<const RunRecord> runs) {
  std::string out = "algo,problem,n,k,beta,R,run_index,seed,evaluations,covered\n";
  for (const auto& r : runs) {
    out += to_string(r.algorithm);
    out += ',';
    out += to_string(r.problem.kind);
    out += ',' + std::to_string(r.problem.n) + ',';
    if (r.problem.has_jump_size()) out += std::to_string(r.problem.k);
    out += ',';
    if (r.beta) out += format_double(*r.beta);
    out += ',';
    if (r.R) out += std::to_string(*r.R);
    out += ',' + std::to_string(r.run_index) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.evaluations) + ',' + (r.covered ? "true" : "false") + '\n';
  }
  return out;
}

std::string stats_csv(std::span<const StatsRow> rows) {
  std::string out = "algo,n,k,runs,mean,q1,q3,ref_curve\n";
  for (const auto& r : rows) {
    out += to_string(r.algorithm);
    out += ',' + std::to_string(r.n) + ',';
    if (r.k != 0) out += std::to_string(r.k);
    out += ',' + std::to_string(r.runs) + ',' + format_double(r.mean) + ',' + format_double(r.q1) + ',' +
           format_double(r.q3) + ',';
    if (r.ref_curve) out += format_double(*r.ref_curve);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
  write_text_file(dir / "runs.csv", runs_csv(result.runs));
  write_text_file(dir / "stats.csv", stats_csv(result.rows));
}

}  // namespace momo
