#include "momo/oracle.hpp"

#include <algorithm>
#include <map>

#include "momo/archive.hpp"
#include "momo/error.hpp"

namespace momo {

std::vector<BitString> FrontReport::pareto_set() const {
  std::vector<BitString> out;
  out.reserve(pareto_masks.size());
  for (const auto mask : pareto_masks) out.push_back(BitString::from_mask(problem.n, mask));
  return out;
}

FrontReport brute_force_front(const ProblemInstance& problem) {
  return brute_force_front(problem, [&](const BitString& x) { return evaluate(problem, x); });
}

FrontReport brute_force_front(const ProblemInstance& problem, const Evaluator& evaluator) {
  if (problem.n > kMaxOracleBits) {
    throw UsageError("brute-force oracle supports n <= " + std::to_string(kMaxOracleBits));
  }
  const std::uint32_t count = std::uint32_t{1} << problem.n;

  // Group points by objective value.
  std::map<ObjectiveValue, std::vector<std::uint32_t>> classes;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    classes[evaluator(BitString::from_mask(problem.n, mask))].push_back(mask);
  }

  std::vector<ObjectiveValue> front;
  for (const auto& [v, points] : classes) {
    const bool dominated = std::any_of(classes.begin(), classes.end(),
                                       [&](const auto& other) { return dominates(other.first, v); });
    if (!dominated) front.push_back(v);
  }

  FrontReport report{problem, {}, ParetoFront(front)};
  for (const auto& v : front) {
    const auto& points = classes.at(v);
    report.pareto_masks.insert(report.pareto_masks.end(), points.begin(), points.end());
  }
  std::sort(report.pareto_masks.begin(), report.pareto_masks.end());
  return report;
}

std::vector<std::uint32_t> analytic_pareto_masks(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> masks;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const auto ones = static_cast<std::size_t>(std::popcount(mask));
    if ((ones >= k && ones <= n - k) || ones == 0 || ones == n) masks.push_back(mask);
  }
  return masks;
}

bool verify_theorem1(std::size_t n, std::size_t k) {
  return verify_theorem1(n, k, [n, k](const BitString& x) { return eval_ojzj(x, n, k); });
}

bool verify_theorem1(std::size_t n, std::size_t k, const Evaluator& evaluator) {
  if (n < 2 || n > kMaxOracleBits) throw UsageError("verify_theorem1 requires 2 <= n <= 24");
  const auto problem = ProblemInstance::make(ProblemKind::OneJumpZeroJump, n, k);
  const FrontReport report = brute_force_front(problem, evaluator);
  return report.pareto_front == analytic_front(problem) &&
         report.pareto_masks == analytic_pareto_masks(n, k);
}

}  // namespace momo
