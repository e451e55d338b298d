#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

namespace linkcat {

/// A finite set of vertex (or link) indices, kept sorted and duplicate-free.
using Subset = std::vector<std::size_t>;

inline Subset make_subset(std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Subset set_intersection(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline Subset set_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool is_subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool are_disjoint(const Subset& a, const Subset& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

inline bool contains(const Subset& s, std::size_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace linkcat
