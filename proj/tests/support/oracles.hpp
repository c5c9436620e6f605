#pragma once

// Test-only reference computations. None of these call into the engine or
// the chain solver; they restate each quantity from first principles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace coupon::testing {

/// Single-arrival expectation with unequal probabilities, term by term:
/// sum over nonempty S of (-1)^(|S|+1) / (sum_{i in S} p_i).
inline double single_arrival_direct(const std::vector<double>& p) {
  const int m = static_cast<int>(p.size());
  long double total = 0.0L;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    long double hit = 0.0L;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) hit += p[static_cast<std::size_t>(i)];
    }
    const long double term = 1.0L / hit;
    total += std::popcount(s) % 2 == 1 ? term : -term;
  }
  return static_cast<double>(total);
}

/// m * H_m as the sum of the m geometric stage means m / (m - j).
inline double coupon_stage_sum(int m) {
  long double total = 0.0L;
  for (int j = m - 1; j >= 0; --j) total += static_cast<long double>(m) / (m - j);
  return static_cast<double>(total);
}

/// Draft-lottery probability that the final group is exactly `group` (sorted
/// type indices), by enumerating all g! draw orders.
inline double draft_group_probability_by_permutation(const std::vector<double>& p, std::vector<int> group) {
  std::sort(group.begin(), group.end());
  double total = 0.0;
  do {
    double prob = 1.0;
    double taken = 0.0;
    for (int t : group) {
      prob *= p[static_cast<std::size_t>(t)] / (1.0 - taken);
      taken += p[static_cast<std::size_t>(t)];
    }
    total += prob;
  } while (std::next_permutation(group.begin(), group.end()));
  return total;
}

/// Expected groups for WithoutReplacement counts (1,1,1), g = 2: the first
/// draw leaves one type missing, and each later pair contains it w.p. 2/3.
inline double three_singletons_pairs() { return 1.0 + 1.0 / (2.0 / 3.0); }

/// Expected groups for UniformDistinct m = 4, g = 2 by hand recursion over the
/// number of collected types: from 2 collected, a pair brings both missing
/// types w.p. 1/6 and one of them w.p. 4/6; from 3 collected it brings the
/// last type w.p. 3/6.
inline double uniform_four_pairs() {
  const double from_three = 6.0 / 3.0;
  // E2 = 1 + (1/6)*0 + (4/6)*E3 + (1/6)*E2
  const double from_two = (1.0 + (4.0 / 6.0) * from_three) / (5.0 / 6.0);
  return 1.0 + from_two;
}

}  // namespace coupon::testing
