#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "momo/archive.hpp"
#include "momo/objectives.hpp"
#include "momo/rng.hpp"
#include "momo/stagnation.hpp"

namespace momo {

enum class AlgorithmKind { Semo, Gsemo, GsemoHtm, SdGsemo, SdGsemoInd };

std::string_view to_string(AlgorithmKind kind) noexcept;
// Accepts "semo", "gsemo", "gsemo-htm", "sd-gsemo", "sd-gsemo-ind".
AlgorithmKind parse_algorithm_kind(std::string_view name);

inline bool uses_beta(AlgorithmKind kind) noexcept { return kind == AlgorithmKind::GsemoHtm; }
inline bool uses_safety(AlgorithmKind kind) noexcept {
  return kind == AlgorithmKind::SdGsemo || kind == AlgorithmKind::SdGsemoInd;
}

inline constexpr double kDefaultBeta = 1.5;

// Snapshot handed to an observer after every offspring evaluation.
struct IterationEvent {
  std::uint64_t evaluation = 0;   // index of the evaluation just performed
  std::size_t parent_index = 0;   // index of the parent before the update
  bool accepted = false;
  ObjectiveValue offspring_value;
  SdState global_sd;              // SD-GSEMO only; default otherwise
  const Archive* archive = nullptr;
};

using IterationObserver = std::function<void(const IterationEvent&)>;

struct AlgorithmConfig {
  AlgorithmKind kind = AlgorithmKind::Gsemo;
  std::optional<double> beta;         // GSEMO-HTM only; defaults to 1.5
  std::optional<std::uint64_t> R;     // SD variants only; defaults to n
  std::uint64_t budget = 0;           // evaluations; 0 means n^(k+3)
  bool accept_indifferent = false;
  bool record_trace = false;
  IterationObserver observer;

  // Throws UsageError for inapplicable or out-of-range parameters.
  void validate() const;
};

struct TraceEntry {
  std::uint64_t evaluation = 0;
  ObjectiveValue value;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct RunOutcome {
  std::uint64_t evaluations = 0;
  bool covered = false;
  std::size_t final_front_size = 0;
  std::uint64_t seed = 0;
  std::vector<TraceEntry> trace;  // one entry per accepted individual, initial included

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

// A problem together with the front a run must cover: the closed form for
// OneJumpZeroJump, the exhaustive oracle otherwise (n <= 24).
class Benchmark {
 public:
  explicit Benchmark(const ProblemInstance& instance);
  Benchmark(const ProblemInstance& instance, ParetoFront front)
      : instance_(instance), front_(std::move(front)) {}

  const ProblemInstance& instance() const noexcept { return instance_; }
  const ParetoFront& front() const noexcept { return front_; }
  ObjectiveValue evaluate(const BitString& x) const { return momo::evaluate(instance_, x); }

 private:
  ProblemInstance instance_;
  ParetoFront front_;
};

// n^(k+3) saturating at 2^63 - 1.
std::uint64_t default_budget(std::size_t n, std::size_t k);

RunOutcome run_semo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng);
RunOutcome run_gsemo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng);
RunOutcome run_gsemo_htm(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng);
RunOutcome run_sd_gsemo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng);
RunOutcome run_sd_gsemo_ind(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng);

StreamLabel stream_label(const ProblemInstance& instance, AlgorithmKind kind, std::uint64_t run_index);

// Validates config, derives the run's stream from (master_seed, label) and
// dispatches on config.kind.
RunOutcome run(const Benchmark& problem, const AlgorithmConfig& config, std::uint64_t master_seed,
               std::uint64_t run_index);

}  // namespace momo
