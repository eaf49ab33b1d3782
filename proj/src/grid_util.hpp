#pragma once

// Multi-index helpers shared by the lattice sources.

#include <cstddef>
#include <vector>

namespace orthotope::detail {

/// Calls f(index) for every index in the box [0, extents) in row-major
/// order (last coordinate fastest). A zero-length extents vector visits the
/// single empty index once.
template <class F>
void for_each_index(const std::vector<std::size_t>& extents, F&& f) {
  for (std::size_t e : extents) {
    if (e == 0) return;
  }
  std::vector<std::size_t> idx(extents.size(), 0);
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t k = extents.size();
    while (k > 0) {
      --k;
      if (++idx[k] < extents[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (extents.empty()) return;
  }
}

inline std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& extents) {
  std::vector<std::size_t> strides(extents.size(), 1);
  for (std::size_t k = extents.size(); k-- > 1;) strides[k - 1] = strides[k] * extents[k];
  return strides;
}

}  // namespace orthotope::detail
