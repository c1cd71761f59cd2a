#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace continuum {

/// Subset of a context's objects or attributes, indexed by declaration order.
using IndexSet = boost::dynamic_bitset<>;

inline std::vector<std::size_t> indices_of(const IndexSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

inline bool is_proper_subset(const IndexSet& a, const IndexSet& b) {
  return a.is_proper_subset_of(b);
}

}  // namespace continuum
