#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace terracini {

/// Ground-set subsets are bitmasks over element indices (ground sets are
/// capped at 64 elements; the largest instance in scope has 36).
using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

inline int subset_size(Mask m) { return std::popcount(m); }

inline Mask mask_from_indices(std::span<const int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace terracini
