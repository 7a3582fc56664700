#include "momo/algorithms.hpp"

#include <cassert>
#include <string>

#include "momo/error.hpp"
#include "momo/mutation.hpp"
#include "momo/oracle.hpp"

namespace momo {

std::string_view to_string(AlgorithmKind kind) noexcept {
  switch (kind) {
    case AlgorithmKind::Semo: return "semo";
    case AlgorithmKind::Gsemo: return "gsemo";
    case AlgorithmKind::GsemoHtm: return "gsemo-htm";
    case AlgorithmKind::SdGsemo: return "sd-gsemo";
    case AlgorithmKind::SdGsemoInd: return "sd-gsemo-ind";
  }
  return "?";
}

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  if (name == "semo") return AlgorithmKind::Semo;
  if (name == "gsemo") return AlgorithmKind::Gsemo;
  if (name == "gsemo-htm") return AlgorithmKind::GsemoHtm;
  if (name == "sd-gsemo") return AlgorithmKind::SdGsemo;
  if (name == "sd-gsemo-ind") return AlgorithmKind::SdGsemoInd;
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected semo, gsemo, gsemo-htm, sd-gsemo or sd-gsemo-ind)");
}

void AlgorithmConfig::validate() const {
  if (beta && !uses_beta(kind)) {
    throw UsageError("beta applies only to gsemo-htm, not " + std::string(to_string(kind)));
  }
  if (R && !uses_safety(kind)) {
    throw UsageError("R applies only to sd-gsemo and sd-gsemo-ind, not " + std::string(to_string(kind)));
  }
  if (beta && !(*beta > 1.0)) throw UsageError("beta must exceed 1");
  if (R && *R < 1) throw UsageError("R must be at least 1");
}

Benchmark::Benchmark(const ProblemInstance& instance) : instance_(instance) {
  front_ = instance.kind == ProblemKind::OneJumpZeroJump ? analytic_front(instance)
                                                         : brute_force_front(instance).pareto_front;
}

std::uint64_t default_budget(std::size_t n, std::size_t k) {
  std::uint64_t budget = 1;
  for (std::size_t i = 0; i < k + 3; ++i) {
    if (n != 0 && budget > kSaturatedCount / n) return kSaturatedCount;
    budget *= n;
  }
  return budget;
}

namespace {

// State shared by all five loops: archive, evaluation count, coverage and
// the optional trace/observer plumbing.
class RunState {
 public:
  RunState(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng)
      : problem_(problem),
        config_(config),
        rng_(rng),
        archive(config.accept_indifferent),
        budget_(config.budget != 0 ? config.budget
                                   : default_budget(problem.instance().n,
                                                    problem.instance().has_jump_size() ? problem.instance().k : 1)) {
    const BitString x = uniform_random(problem.instance().n, rng);
    const ObjectiveValue v = problem.evaluate(x);
    archive.update(x, v);
    evaluations_ = 1;
    if (config.record_trace) outcome_.trace.push_back({evaluations_, v});
    covered_ = front_covered(archive, problem.front());
  }

  bool done() const noexcept { return covered_ || evaluations_ >= budget_; }

  std::size_t pick_parent() { return static_cast<std::size_t>(rng_.below(archive.size())); }

  bool offer(const BitString& child) {
    last_value_ = problem_.evaluate(child);
    ++evaluations_;
    const bool accepted = archive.update(child, last_value_);
    if (accepted) {
      if (config_.record_trace) outcome_.trace.push_back({evaluations_, last_value_});
      covered_ = front_covered(archive, problem_.front());
    }
#ifndef NDEBUG
    const auto& inst = problem_.instance();
    if (inst.kind == ProblemKind::OneJumpZeroJump) assert(archive.size() <= inst.n - 2 * inst.k + 3);
#endif
    return accepted;
  }

  void notify(std::size_t parent, bool accepted, const SdState& sd = {}) const {
    if (!config_.observer) return;
    config_.observer(IterationEvent{evaluations_, parent, accepted, last_value_, sd, &archive});
  }

  RunOutcome finish() {
    outcome_.evaluations = evaluations_;
    outcome_.covered = covered_;
    outcome_.final_front_size = archive.size();
    outcome_.seed = rng_.seed();
    return std::move(outcome_);
  }

 private:
  const Benchmark& problem_;
  const AlgorithmConfig& config_;
  Rng& rng_;

 public:
  Archive archive;

 private:
  std::uint64_t budget_;
  std::uint64_t evaluations_ = 0;
  bool covered_ = false;
  ObjectiveValue last_value_;
  RunOutcome outcome_;
};

void require_kind(const AlgorithmConfig& config, AlgorithmKind expected) {
  if (config.kind != expected) {
    throw UsageError("config kind " + std::string(to_string(config.kind)) + " passed to " +
                     std::string(to_string(expected)) + " loop");
  }
  config.validate();
}

std::uint64_t safety_parameter(const Benchmark& problem, const AlgorithmConfig& config) {
  return config.R.value_or(problem.instance().n);
}

}  // namespace

RunOutcome run_semo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng) {
  require_kind(config, AlgorithmKind::Semo);
  RunState s(problem, config, rng);
  const std::size_t n = problem.instance().n;
  BitString child(n);
  while (!s.done()) {
    const std::size_t parent = s.pick_parent();
    child = s.archive[parent].genotype;
    child.flip(static_cast<std::size_t>(rng.below(n)));
    const bool accepted = s.offer(child);
    s.notify(parent, accepted);
  }
  return s.finish();
}

RunOutcome run_gsemo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng) {
  require_kind(config, AlgorithmKind::Gsemo);
  RunState s(problem, config, rng);
  const std::size_t n = problem.instance().n;
  BitwiseMutator mutator(n);
  BitString child(n);
  while (!s.done()) {
    const std::size_t parent = s.pick_parent();
    child = s.archive[parent].genotype;
    mutator.mutate_at(child, 1, rng);
    const bool accepted = s.offer(child);
    s.notify(parent, accepted);
  }
  return s.finish();
}

RunOutcome run_gsemo_htm(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng) {
  require_kind(config, AlgorithmKind::GsemoHtm);
  const std::size_t n = problem.instance().n;
  const PowerLawDist dist(n, config.beta.value_or(kDefaultBeta));
  RunState s(problem, config, rng);
  BitwiseMutator mutator(n);
  BitString child(n);
  while (!s.done()) {
    const std::size_t parent = s.pick_parent();
    child = s.archive[parent].genotype;
    mutator.mutate_at(child, dist.sample(rng), rng);
    const bool accepted = s.offer(child);
    s.notify(parent, accepted);
  }
  return s.finish();
}

RunOutcome run_sd_gsemo(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng) {
  require_kind(config, AlgorithmKind::SdGsemo);
  const std::size_t n = problem.instance().n;
  RunState s(problem, config, rng);
  StagnationDetector detector(n, safety_parameter(problem, config));
  BitwiseMutator mutator(n);
  BitString child(n);
  while (!s.done()) {
    const std::size_t parent = s.pick_parent();
    child = s.archive[parent].genotype;
    mutator.mutate_at(child, detector.state().r, rng);
    const bool accepted = s.offer(child);
    detector.on_iteration(accepted, s.archive.size());
    s.notify(parent, accepted, detector.state());
  }
  return s.finish();
}

RunOutcome run_sd_gsemo_ind(const Benchmark& problem, const AlgorithmConfig& config, Rng& rng) {
  require_kind(config, AlgorithmKind::SdGsemoInd);
  const std::size_t n = problem.instance().n;
  const std::uint64_t R = safety_parameter(problem, config);
  const std::size_t cap = max_rate_index(n);
  std::vector<std::uint64_t> phase_length(cap + 1, 0);
  RunState s(problem, config, rng);
  BitwiseMutator mutator(n);
  BitString child(n);
  while (!s.done()) {
    const std::size_t parent = s.pick_parent();
    SdState& sd = s.archive[parent].sd;
    child = s.archive[parent].genotype;
    mutator.mutate_at(child, sd.r, rng);
    // The parent's own counter. Its state is untouched by the archive update
    // (a parent removed by the update discards it), so the phase check can
    // run before the update without changing behavior.
    ++sd.u;
    if (phase_length[sd.r] == 0) phase_length[sd.r] = sd_threshold(1, n, sd.r, R);
    if (sd.u > phase_length[sd.r]) {
      sd.r = std::min(sd.r + 1, cap);
      sd.u = 0;
    }
    const bool accepted = s.offer(child);
    s.notify(parent, accepted);
  }
  return s.finish();
}

StreamLabel stream_label(const ProblemInstance& instance, AlgorithmKind kind, std::uint64_t run_index) {
  return StreamLabel{std::string(to_string(kind)), std::string(to_string(instance.kind)), instance.n,
                     instance.k, run_index};
}

RunOutcome run(const Benchmark& problem, const AlgorithmConfig& config, std::uint64_t master_seed,
               std::uint64_t run_index) {
  config.validate();
  Rng rng(master_seed, stream_label(problem.instance(), config.kind, run_index));
  switch (config.kind) {
    case AlgorithmKind::Semo: return run_semo(problem, config, rng);
    case AlgorithmKind::Gsemo: return run_gsemo(problem, config, rng);
    case AlgorithmKind::GsemoHtm: return run_gsemo_htm(problem, config, rng);
    case AlgorithmKind::SdGsemo: return run_sd_gsemo(problem, config, rng);
    case AlgorithmKind::SdGsemoInd: return run_sd_gsemo_ind(problem, config, rng);
  }
  throw UsageError("unknown algorithm kind");
}

}  // namespace momo
