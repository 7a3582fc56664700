#include <benchmark/benchmark.h>

#include "momo/algorithms.hpp"
#include "momo/archive.hpp"
#include "momo/mutation.hpp"
#include "momo/objectives.hpp"

namespace {

using namespace momo;

void BM_EvalOjzj(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const BitString x = uniform_random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_ojzj(x, n, 4));
}
BENCHMARK(BM_EvalOjzj)->Arg(18)->Arg(50)->Arg(1000);

void BM_MutateAtRate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = static_cast<std::size_t>(state.range(1));
  Rng rng(2);
  BitwiseMutator mutator(n);
  BitString x = uniform_random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mutator.mutate_at(x, r, rng));
}
BENCHMARK(BM_MutateAtRate)->Args({50, 1})->Args({50, 4})->Args({1000, 1});

void BM_StandardBitwisePerCall(benchmark::State& state) {
  Rng rng(3);
  const BitString x = uniform_random(50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(standard_bitwise(x, 1.0 / 50, rng));
}
BENCHMARK(BM_StandardBitwisePerCall);

void BM_PowerLawSample(benchmark::State& state) {
  const PowerLawDist dist(static_cast<std::size_t>(state.range(0)), 1.5);
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_power_law(dist, rng));
}
BENCHMARK(BM_PowerLawSample)->Arg(50)->Arg(1000);

// Offers random single-objective-space points to a full-front archive, the
// steady state of a run close to coverage.
void BM_ArchiveUpdate(benchmark::State& state) {
  const std::size_t n = 50, k = 4;
  Rng rng(5);
  std::vector<BitString> strings;
  for (std::size_t j = 0; j <= n; ++j) {
    BitString x(n);
    for (std::size_t i = 0; i < j; ++i) x.set(i, true);
    strings.push_back(x);
  }
  Archive archive;
  for (std::size_t j = k; j <= n - k; ++j) archive.update(strings[j], eval_ojzj(strings[j], n, k));
  for (auto _ : state) {
    const BitString& x = strings[rng.below(n + 1)];
    benchmark::DoNotOptimize(archive.update(x, eval_ojzj(x, n, k)));
  }
}
BENCHMARK(BM_ArchiveUpdate);

void BM_FullRun(benchmark::State& state) {
  const auto kind = static_cast<AlgorithmKind>(state.range(0));
  const Benchmark problem(ProblemInstance::make(ProblemKind::OneJumpZeroJump, 10, 3));
  AlgorithmConfig config;
  config.kind = kind;
  std::uint64_t run_index = 0, evaluations = 0;
  for (auto _ : state) {
    const RunOutcome o = run(problem, config, 1, run_index++);
    evaluations += o.evaluations;
  }
  state.counters["evals/s"] = benchmark::Counter(static_cast<double>(evaluations), benchmark::Counter::kIsRate);
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_FullRun)
    ->Arg(static_cast<int>(AlgorithmKind::Gsemo))
    ->Arg(static_cast<int>(AlgorithmKind::GsemoHtm))
    ->Arg(static_cast<int>(AlgorithmKind::SdGsemo))
    ->Arg(static_cast<int>(AlgorithmKind::SdGsemoInd))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
