#pragma once

#include "continuum/bitset.hpp"

#include <optional>

namespace continuum::detail {

/// One NextClosure step for an arbitrary closure operator over n positions.
/// Position 0 is the most significant in lectic order.
template <typename Closure>
std::optional<IndexSet> lectic_successor(IndexSet current, Closure&& close) {
  const auto n = current.size();
  for (std::size_t k = n; k-- > 0;) {
    if (current.test(k)) {
      current.reset(k);
      continue;
    }
    IndexSet candidate = current;
    candidate.set(k);
    candidate = close(candidate);
    // Canonicity: no new element before k.
    IndexSet added = candidate - current;
    if (added.find_first() == k) return candidate;
  }
  return std::nullopt;
}

}  // namespace continuum::detail
