#include "momo/archive.hpp"

#include <algorithm>

namespace momo {

bool Archive::would_accept(const ObjectiveValue& value) const noexcept {
  for (const auto& m : members_) {
    if (accept_indifferent_ ? dominates(m.value, value) : weakly_dominates(m.value, value)) return false;
  }
  return true;
}

bool Archive::update(const BitString& x, const ObjectiveValue& value) {
  if (!would_accept(value)) return false;
  std::erase_if(members_, [&](const ArchiveMember& m) { return weakly_dominates(value, m.value); });
  members_.push_back(ArchiveMember{x, value, SdState{}});
  return true;
}

std::size_t Archive::find(const ObjectiveValue& value) const noexcept {
  const auto it = std::find_if(members_.begin(), members_.end(),
                               [&](const ArchiveMember& m) { return m.value == value; });
  return static_cast<std::size_t>(it - members_.begin());
}

bool front_covered(const Archive& archive, const ParetoFront& front) noexcept {
  if (front.empty()) return true;
  if (archive.size() < front.size()) return false;
  std::size_t hits = 0;
  for (const auto& m : archive.members()) {
    if (front.contains(m.value)) ++hits;
  }
  return hits == front.size();
}

}  // namespace momo
