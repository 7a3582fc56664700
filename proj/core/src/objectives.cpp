#include "momo/objectives.hpp"

#include <algorithm>

#include "momo/error.hpp"

namespace momo {
namespace {

void require_length(const BitString& x, std::size_t n) {
  if (x.size() != n) throw UsageError("bitstring length does not match problem size n");
}

std::int64_t jump_of_count(std::size_t ones, std::size_t n, std::size_t k) {
  if (ones <= n - k || ones == n) return static_cast<std::int64_t>(k + ones);
  return static_cast<std::int64_t>(n - ones);
}

}  // namespace

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::OneJumpZeroJump: return "ojzj";
    case ProblemKind::Zplg: return "zplg";
    case ProblemKind::Spg: return "spg";
    case ProblemKind::DecObj: return "decobj";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "ojzj") return ProblemKind::OneJumpZeroJump;
  if (name == "zplg") return ProblemKind::Zplg;
  if (name == "spg") return ProblemKind::Spg;
  if (name == "decobj") return ProblemKind::DecObj;
  throw UsageError("unknown problem '" + std::string(name) + "' (expected ojzj, zplg, spg or decobj)");
}

ProblemInstance ProblemInstance::make(ProblemKind kind, std::size_t n, std::size_t k) {
  if (n == 0) throw UsageError("problem size n must be positive");
  switch (kind) {
    case ProblemKind::OneJumpZeroJump:
      if (k < 1 || k > n / 2) throw UsageError("ojzj requires 1 <= k <= floor(n/2)");
      return {kind, n, k};
    case ProblemKind::Zplg:
      if (n % 8 != 0) throw UsageError("zplg requires n divisible by 8");
      break;
    case ProblemKind::Spg:
    case ProblemKind::DecObj:
      if (n < 2) throw UsageError(std::string(to_string(kind)) + " requires n >= 2");
      break;
  }
  if (k != 0) throw UsageError(std::string(to_string(kind)) + " takes no jump size k");
  return {kind, n, 0};
}

std::int64_t eval_jump(const BitString& x, std::size_t n, std::size_t k) {
  require_length(x, n);
  if (k < 1 || k > n) throw UsageError("jump requires 1 <= k <= n");
  return jump_of_count(ones_count(x), n, k);
}

ObjectiveValue eval_ojzj(const BitString& x, std::size_t n, std::size_t k) {
  require_length(x, n);
  if (k < 1 || k > n / 2) throw UsageError("ojzj requires 1 <= k <= floor(n/2)");
  const std::size_t ones = ones_count(x);
  return {jump_of_count(ones, n, k), jump_of_count(n - ones, n, k)};
}

ObjectiveValue eval_zplg(const BitString& x, std::size_t n) {
  require_length(x, n);
  if (n % 8 != 0) throw UsageError("zplg requires n divisible by 8");
  const auto n64 = static_cast<std::int64_t>(n);
  if (const auto prefix = ones_prefix_length(x)) {
    const std::size_t i = *prefix;
    if (i >= 1 && i <= 3 * n / 4 - 1) return {n64 + 1, 1};
    if (i >= 3 * n / 4 && (i - 3 * n / 4) % 2 == 0) {
      return {n64 + 2 + static_cast<std::int64_t>((i - 3 * n / 4) / 2), 0};
    }
  }
  return {static_cast<std::int64_t>(zeros_count(x)), 2};
}

ObjectiveValue eval_spg(const BitString& x, std::size_t n) {
  require_length(x, n);
  if (const auto prefix = ones_prefix_length(x); prefix && *prefix >= 1) {
    const std::size_t i = *prefix;
    if (i % 3 == 1) return {-1, 0};
    return {static_cast<std::int64_t>(i * n), 0};
  }
  return {static_cast<std::int64_t>(zeros_count(x)), 1};
}

ObjectiveValue eval_decobj(const BitString& x, std::size_t n) {
  require_length(x, n);
  const std::size_t zeros = zeros_count(x);
  return {static_cast<std::int64_t>(n + 1 - zeros % (n + 1)),
          static_cast<std::int64_t>((n + zeros) % (n + 1))};
}

ObjectiveValue evaluate(const ProblemInstance& problem, const BitString& x) {
  switch (problem.kind) {
    case ProblemKind::OneJumpZeroJump: return eval_ojzj(x, problem.n, problem.k);
    case ProblemKind::Zplg: return eval_zplg(x, problem.n);
    case ProblemKind::Spg: return eval_spg(x, problem.n);
    case ProblemKind::DecObj: return eval_decobj(x, problem.n);
  }
  throw UsageError("unknown problem kind");
}

ParetoFront::ParetoFront(std::vector<ObjectiveValue> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool ParetoFront::contains(const ObjectiveValue& v) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), v);
}

ParetoFront analytic_front(const ProblemInstance& problem) {
  if (problem.kind != ProblemKind::OneJumpZeroJump) {
    throw UsageError("no closed-form front for '" + std::string(to_string(problem.kind)) +
                     "'; use brute_force_front");
  }
  const auto n = static_cast<std::int64_t>(problem.n);
  const auto k = static_cast<std::int64_t>(problem.k);
  std::vector<ObjectiveValue> values;
  values.push_back({k, k + n});
  for (std::int64_t a = 2 * k; a <= n; ++a) values.push_back({a, 2 * k + n - a});
  values.push_back({n + k, k});
  return ParetoFront(std::move(values));
}

}  // namespace momo
