#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "momo/algorithms.hpp"
#include "momo/error.hpp"

namespace momo {
namespace {

Benchmark ojzj(std::size_t n, std::size_t k) {
  return Benchmark(ProblemInstance::make(ProblemKind::OneJumpZeroJump, n, k));
}

AlgorithmConfig config_for(AlgorithmKind kind, std::uint64_t budget = 0) {
  AlgorithmConfig c;
  c.kind = kind;
  c.budget = budget;
  return c;
}

double mean_evaluations(const Benchmark& b, const AlgorithmConfig& c, std::uint64_t runs, std::uint64_t seed) {
  double total = 0;
  for (std::uint64_t i = 0; i < runs; ++i) {
    const RunOutcome o = run(b, c, seed, i);
    EXPECT_TRUE(o.covered);
    total += static_cast<double>(o.evaluations);
  }
  return total / static_cast<double>(runs);
}

constexpr AlgorithmKind kAllKinds[] = {AlgorithmKind::Semo, AlgorithmKind::Gsemo, AlgorithmKind::GsemoHtm,
                                       AlgorithmKind::SdGsemo, AlgorithmKind::SdGsemoInd};

TEST(Semo, NeverCoversWithJumpTwo) {
  const Benchmark b = ojzj(4, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AlgorithmConfig c = config_for(AlgorithmKind::Semo, 100000);
    c.record_trace = true;
    const RunOutcome o = run(b, c, seed, 0);
    EXPECT_FALSE(o.covered);
    EXPECT_EQ(o.evaluations, 100000U);
    // Once the middle value exists, gap values can never enter.
    bool middle_seen = false;
    for (const TraceEntry& t : o.trace) {
      if (middle_seen) {
        EXPECT_NE(t.value, (ObjectiveValue{3, 1}));
        EXPECT_NE(t.value, (ObjectiveValue{1, 3}));
      }
      middle_seen = middle_seen || t.value == ObjectiveValue{4, 4};
    }
  }
}

TEST(Semo, CoversWithJumpOne) {
  const Benchmark b = ojzj(4, 1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RunOutcome o = run(b, config_for(AlgorithmKind::Semo, 100000), seed, 0);
    EXPECT_TRUE(o.covered) << "seed " << seed;
    EXPECT_EQ(o.final_front_size, 5U);
  }
}

TEST(Gsemo, CoversSmallestInstance) {
  const Benchmark b = ojzj(2, 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RunOutcome o = run(b, config_for(AlgorithmKind::Gsemo, 100000), seed, 0);
    EXPECT_TRUE(o.covered);
    EXPECT_EQ(o.final_front_size, 3U);
  }
}

TEST(Gsemo, MeanWithinRuntimeBoundsAtTen) {
  constexpr double n = 10, k = 4;
  const double e = std::numbers::e;
  const double upper = e * (n - 2 * k + 3) * (1.5 * std::pow(n, k) + 2 * n * std::log(std::ceil(n / 2)) + 3);
  const double lower = 0.2 * 1.5 * e * (n - 2 * k) * std::pow(n, k);
  EXPECT_NEAR(upper, 2.0435e5, 1e2);
  const double mean = mean_evaluations(ojzj(10, 4), config_for(AlgorithmKind::Gsemo), 100, 3);
  EXPECT_LE(mean, upper);
  EXPECT_GE(mean, lower);
}

TEST(GsemoHtm, FasterThanGsemoAtTen) {
  const Benchmark b = ojzj(10, 4);
  const double gsemo = mean_evaluations(b, config_for(AlgorithmKind::Gsemo), 100, 5);
  const double htm = mean_evaluations(b, config_for(AlgorithmKind::GsemoHtm), 100, 5);
  EXPECT_LT(htm, gsemo);
}

TEST(GsemoHtm, MatchesGsemoInDistributionAtTwoBits) {
  const Benchmark b = ojzj(2, 1);
  const double gsemo = mean_evaluations(b, config_for(AlgorithmKind::Gsemo, 100000), 20000, 8);
  const double htm = mean_evaluations(b, config_for(AlgorithmKind::GsemoHtm, 100000), 20000, 8);
  EXPECT_NEAR(htm / gsemo, 1.0, 0.05);
}

TEST(SdGsemo, IndividualCountersPerformSimilarly) {
  const Benchmark b = ojzj(10, 4);
  const double sd = mean_evaluations(b, config_for(AlgorithmKind::SdGsemo), 100, 9);
  const double ind = mean_evaluations(b, config_for(AlgorithmKind::SdGsemoInd), 100, 9);
  EXPECT_LE(ind / sd, 2.0);
  EXPECT_GE(ind / sd, 0.5);
}

TEST(AllAlgorithms, ArchiveInvariantsEveryIteration) {
  for (const AlgorithmKind kind : kAllKinds) {
    for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{8, 2}, {9, 3}, {12, 4}}) {
      const Benchmark b = ojzj(n, k);
      AlgorithmConfig c = config_for(kind, 20000);
      std::uint64_t events = 0;
      c.observer = [&](const IterationEvent& e) {
        ++events;
        const Archive& a = *e.archive;
        ASSERT_LE(a.size(), n - 2 * k + 3);
        for (std::size_t i = 0; i < a.size(); ++i) {
          ASSERT_EQ(a[i].value, eval_ojzj(a[i].genotype, n, k));
          for (std::size_t j = 0; j < a.size(); ++j) {
            if (i != j) ASSERT_FALSE(weakly_dominates(a[i].value, a[j].value));
          }
        }
      };
      const RunOutcome o = run(b, c, 21, 0);
      EXPECT_EQ(o.evaluations, events + 1) << to_string(kind);
      EXPECT_LE(o.evaluations, 20000U);
      EXPECT_LE(o.final_front_size, n - 2 * k + 3);
    }
  }
}

TEST(AllAlgorithms, EvaluationAccounting) {
  for (const AlgorithmKind kind : kAllKinds) {
    AlgorithmConfig c = config_for(kind, 5000);
    std::uint64_t expected = 2;
    c.observer = [&](const IterationEvent& e) {
      ASSERT_EQ(e.evaluation, expected);
      ++expected;
    };
    const RunOutcome o = run(ojzj(10, 3), c, 4, 0);
    EXPECT_EQ(o.evaluations, expected - 1);
  }
}

TEST(AllAlgorithms, BudgetStopReportsCoverageAtStop) {
  for (const AlgorithmKind kind : kAllKinds) {
    const Benchmark b = ojzj(10, 4);
    AlgorithmConfig c = config_for(kind, 50);
    bool covered_at_last = true;
    c.observer = [&](const IterationEvent& e) { covered_at_last = front_covered(*e.archive, b.front()); };
    const RunOutcome o = run(b, c, 6, 0);
    EXPECT_EQ(o.evaluations, 50U);
    EXPECT_FALSE(o.covered);
    EXPECT_EQ(o.covered, covered_at_last);
  }
}

TEST(AllAlgorithms, TraceStartsWithInitialIndividual) {
  for (const AlgorithmKind kind : kAllKinds) {
    AlgorithmConfig c = config_for(kind, 100000);
    c.record_trace = true;
    const RunOutcome o = run(ojzj(6, 2), c, 2, 0);
    ASSERT_FALSE(o.trace.empty());
    EXPECT_EQ(o.trace.front().evaluation, 1U);
    for (std::size_t i = 1; i < o.trace.size(); ++i) EXPECT_LT(o.trace[i - 1].evaluation, o.trace[i].evaluation);
    if (o.covered) EXPECT_EQ(o.trace.back().evaluation, o.evaluations);
  }
}

TEST(SdGsemo, RateStepsExactlyWhenCounterExceedsPhase) {
  const std::size_t n = 10;
  const Benchmark b = ojzj(n, 4);
  std::size_t rate_increases = 0;
  for (std::uint64_t run_index = 0; run_index < 20; ++run_index) {
    AlgorithmConfig c = config_for(AlgorithmKind::SdGsemo);
    SdState prev;
    c.observer = [&](const IterationEvent& e) {
      SdState want;
      if (!e.accepted) {
        want = SdState{prev.r, prev.u + 1};
        if (want.u > sd_threshold(e.archive->size(), n, prev.r, n)) {
          want = SdState{std::min(prev.r + 1, n / 2), 0};
          ++rate_increases;
        }
      }
      ASSERT_EQ(e.global_sd, want);
      ASSERT_GE(e.global_sd.r, e.accepted ? 1U : prev.r);
      prev = e.global_sd;
    };
    EXPECT_TRUE(run(b, c, 10, run_index).covered);
  }
  EXPECT_GT(rate_increases, 20U);
}

TEST(SdGsemoInd, CountersAreIsolatedPerMember) {
  const std::size_t n = 10;
  const Benchmark b = ojzj(n, 4);
  std::size_t rate_increases = 0;
  for (std::uint64_t run_index = 0; run_index < 20; ++run_index) {
    AlgorithmConfig traced = config_for(AlgorithmKind::SdGsemoInd);
    traced.record_trace = true;
    const ObjectiveValue initial = run(b, traced, 12, run_index).trace.front().value;

    AlgorithmConfig c = config_for(AlgorithmKind::SdGsemoInd);
    std::vector<std::pair<ObjectiveValue, SdState>> prev{{initial, SdState{}}};
    c.observer = [&](const IterationEvent& e) {
      const auto [parent_value, p] = prev.at(e.parent_index);
      SdState parent_want{p.r, p.u + 1};
      if (parent_want.u > sd_threshold(1, n, p.r, n)) {
        parent_want = SdState{std::min(p.r + 1, n / 2), 0};
        ++rate_increases;
      }
      std::vector<std::pair<ObjectiveValue, SdState>> now;
      for (const ArchiveMember& m : e.archive->members()) {
        if (e.accepted && m.value == e.offspring_value) {
          ASSERT_EQ(m.sd, SdState{});
        } else if (m.value == parent_value) {
          ASSERT_EQ(m.sd, parent_want);
        } else {
          const auto it = std::find_if(prev.begin(), prev.end(), [&](const auto& q) { return q.first == m.value; });
          ASSERT_NE(it, prev.end());
          ASSERT_EQ(m.sd, it->second);
        }
        now.emplace_back(m.value, m.sd);
      }
      prev = std::move(now);
    };
    EXPECT_TRUE(run(b, c, 12, run_index).covered);
  }
  EXPECT_GT(rate_increases, 20U);
}

TEST(SdGsemo, AcceptIndifferentLetsEqualValuesIn) {
  for (const bool flag : {false, true}) {
    AlgorithmConfig c = config_for(AlgorithmKind::SdGsemo, 20000);
    c.accept_indifferent = flag;
    std::size_t indifferent = 0;
    std::set<ObjectiveValue> present;
    c.observer = [&](const IterationEvent& e) {
      if (e.accepted && present.count(e.offspring_value) > 0) ++indifferent;
      present.clear();
      for (const auto& m : e.archive->members()) present.insert(m.value);
    };
    run(ojzj(12, 4), c, 14, 0);
    if (flag) {
      EXPECT_GT(indifferent, 0U);
    } else {
      EXPECT_EQ(indifferent, 0U);
    }
  }
}

TEST(Run, DeterministicAndStreamSeparated) {
  const Benchmark b = ojzj(8, 2);
  for (const AlgorithmKind kind : kAllKinds) {
    AlgorithmConfig c = config_for(kind, 200000);
    c.record_trace = true;
    EXPECT_EQ(run(b, c, 77, 3), run(b, c, 77, 3));
    std::set<std::uint64_t> seeds;
    std::vector<RunOutcome> outcomes;
    for (std::uint64_t i = 0; i < 10; ++i) {
      outcomes.push_back(run(b, c, 77, i));
      seeds.insert(outcomes.back().seed);
    }
    EXPECT_EQ(seeds.size(), 10U);
    std::size_t equal_traces = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      for (std::size_t j = i + 1; j < outcomes.size(); ++j) equal_traces += outcomes[i].trace == outcomes[j].trace;
    }
    EXPECT_LE(equal_traces, 1U);
  }
}

TEST(Run, ConfigValidation) {
  const Benchmark b = ojzj(8, 2);
  AlgorithmConfig c = config_for(AlgorithmKind::Gsemo);
  c.beta = 1.5;
  EXPECT_THROW(run(b, c, 1, 0), UsageError);
  c = config_for(AlgorithmKind::GsemoHtm);
  c.R = 8;
  EXPECT_THROW(run(b, c, 1, 0), UsageError);
  c = config_for(AlgorithmKind::GsemoHtm);
  c.beta = 1.0;
  EXPECT_THROW(run(b, c, 1, 0), UsageError);
  c = config_for(AlgorithmKind::SdGsemo);
  c.R = 0;
  EXPECT_THROW(run(b, c, 1, 0), UsageError);
  c = config_for(AlgorithmKind::Gsemo);
  Rng rng(1);
  EXPECT_THROW(run_sd_gsemo(b, c, rng), UsageError);
}

TEST(Run, AuxiliaryProblemsUseExhaustiveFront) {
  const Benchmark dec(ProblemInstance::make(ProblemKind::DecObj, 6));
  EXPECT_EQ(dec.front().values(), (std::vector<ObjectiveValue>{{7, 6}}));
  const RunOutcome o = run(dec, config_for(AlgorithmKind::Gsemo), 1, 0);
  EXPECT_TRUE(o.covered);
  EXPECT_EQ(o.final_front_size, 1U);
}

TEST(DefaultBudget, SmallValuesAndSaturation) {
  EXPECT_EQ(default_budget(10, 4), 10000000U);
  EXPECT_EQ(default_budget(2, 1), 16U);
  EXPECT_EQ(default_budget(1000, 10), kSaturatedCount);
}

}  // namespace
}  // namespace momo
