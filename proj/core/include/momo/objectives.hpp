#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "momo/bits.hpp"

namespace momo {

// Bi-objective value; both objectives are maximized.
struct ObjectiveValue {
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;

  friend auto operator<=>(const ObjectiveValue&, const ObjectiveValue&) = default;
};

enum class ProblemKind { OneJumpZeroJump, Zplg, Spg, DecObj };

std::string_view to_string(ProblemKind kind) noexcept;
// Accepts "ojzj", "zplg", "spg", "decobj"; throws UsageError otherwise.
ProblemKind parse_problem_kind(std::string_view name);

// Validated problem parameters. k is only meaningful for OneJumpZeroJump and
// is zero for the other kinds.
struct ProblemInstance {
  ProblemKind kind = ProblemKind::OneJumpZeroJump;
  std::size_t n = 0;
  std::size_t k = 0;

  // Throws UsageError when (kind, n, k) violates the kind's constraints:
  // ojzj needs 1 <= k <= n/2, zplg needs 8 | n, spg and decobj need n >= 2.
  static ProblemInstance make(ProblemKind kind, std::size_t n, std::size_t k = 0);

  bool has_jump_size() const noexcept { return kind == ProblemKind::OneJumpZeroJump; }
};

std::int64_t eval_jump(const BitString& x, std::size_t n, std::size_t k);
ObjectiveValue eval_ojzj(const BitString& x, std::size_t n, std::size_t k);
ObjectiveValue eval_zplg(const BitString& x, std::size_t n);
ObjectiveValue eval_spg(const BitString& x, std::size_t n);
// f1 = n + 1 - (|x|_0 mod (n+1)), f2 = (n + |x|_0) mod (n+1).
ObjectiveValue eval_decobj(const BitString& x, std::size_t n);

// Dispatches on problem.kind; x must have length problem.n.
ObjectiveValue evaluate(const ProblemInstance& problem, const BitString& x);

// Sorted (ascending) set of objective values forming a Pareto front.
class ParetoFront {
 public:
  ParetoFront() = default;
  explicit ParetoFront(std::vector<ObjectiveValue> values);

  const std::vector<ObjectiveValue>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(const ObjectiveValue& v) const noexcept;

  friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

 private:
  std::vector<ObjectiveValue> values_;
};

// Closed form {(a, 2k + n - a) : a in [2k..n] u {k, n+k}}; OneJumpZeroJump only.
ParetoFront analytic_front(const ProblemInstance& problem);

}  // namespace momo
