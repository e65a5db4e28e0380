#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sixvertex/errors.hpp"

namespace sixvertex {

/// Default largest M for M!-term sums.
inline constexpr int kDefaultPermutationCap = 9;

inline void check_permutation_cap(int M, int cap) {
  if (M > cap) {
    throw SizeError("permutation sum over " + std::to_string(M) + "! terms exceeds the cap M <= " +
                    std::to_string(cap));
  }
}

/// Calls f(p) for every permutation p of 0..n-1 in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    f(static_cast<const std::vector<int>&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

inline bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<int> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) return false;
  }
  return true;
}

}  // namespace sixvertex
