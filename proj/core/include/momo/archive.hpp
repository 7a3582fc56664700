#pragma once

#include <cstddef>
#include <vector>

#include "momo/bits.hpp"
#include "momo/objectives.hpp"
#include "momo/stagnation.hpp"

namespace momo {

inline bool weakly_dominates(const ObjectiveValue& u, const ObjectiveValue& v) noexcept {
  return u.f1 >= v.f1 && u.f2 >= v.f2;
}

inline bool dominates(const ObjectiveValue& u, const ObjectiveValue& v) noexcept {
  return weakly_dominates(u, v) && u != v;
}

struct ArchiveMember {
  BitString genotype;
  ObjectiveValue value;
  SdState sd;  // used only by the per-individual stagnation-detection variant
};

// Non-dominated population with the insertion rule shared by SEMO, GSEMO and
// their variants. Stored as a flat vector; removal keeps relative order so
// uniform parent selection by index stays reproducible.
//
// Invariant: no member weakly dominates another (so all values are distinct).
class Archive {
 public:
  // accept_indifferent = false: an offspring is rejected when any member
  //   weakly dominates it, equal values included.
  // accept_indifferent = true: an offspring is rejected only when a member
  //   strictly dominates it; an equal-valued member is replaced.
  explicit Archive(bool accept_indifferent = false) : accept_indifferent_(accept_indifferent) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const ArchiveMember& operator[](std::size_t i) const noexcept { return members_[i]; }
  ArchiveMember& operator[](std::size_t i) noexcept { return members_[i]; }
  const std::vector<ArchiveMember>& members() const noexcept { return members_; }
  bool accepts_indifferent() const noexcept { return accept_indifferent_; }

  bool would_accept(const ObjectiveValue& value) const noexcept;

  // On acceptance removes every member whose value the new value weakly
  // dominates and appends (x, value) with a fresh SdState. x is copied only
  // when accepted. Returns whether x entered the archive.
  bool update(const BitString& x, const ObjectiveValue& value);

  // Index of the member holding value, or size() if absent.
  std::size_t find(const ObjectiveValue& value) const noexcept;

 private:
  bool accept_indifferent_;
  std::vector<ArchiveMember> members_;
};

// True iff every front value is the value of some archive member.
bool front_covered(const Archive& archive, const ParetoFront& front) noexcept;

}  // namespace momo
