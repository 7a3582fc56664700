#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "momo/bits.hpp"
#include "momo/objectives.hpp"

namespace momo {

inline constexpr std::size_t kMaxOracleBits = 24;

// Exhaustive Pareto set and front. The set is stored as bit masks
// (bit i = position i) in ascending order; pareto_set() materializes it.
struct FrontReport {
  ProblemInstance problem;
  std::vector<std::uint32_t> pareto_masks;
  ParetoFront pareto_front;

  std::vector<BitString> pareto_set() const;
};

using Evaluator = std::function<ObjectiveValue(const BitString&)>;

// Enumerates all 2^n points. A point is Pareto optimal iff no point strictly
// dominates it; dominance is decided once per distinct value.
// Throws UsageError when n > kMaxOracleBits.
FrontReport brute_force_front(const ProblemInstance& problem);
FrontReport brute_force_front(const ProblemInstance& problem, const Evaluator& evaluator);

// Pareto set of OneJumpZeroJump as claimed in closed form:
// {x : |x|_1 in [k..n-k] u {0, n}}, as ascending masks.
std::vector<std::uint32_t> analytic_pareto_masks(std::size_t n, std::size_t k);

// Compares the exhaustive front and set (under evaluator, default the real
// OneJumpZeroJump) with the closed forms. Requires 2 <= n <= 24 and
// 1 <= k <= n/2; throws UsageError otherwise.
bool verify_theorem1(std::size_t n, std::size_t k);
bool verify_theorem1(std::size_t n, std::size_t k, const Evaluator& evaluator);

}  // namespace momo
