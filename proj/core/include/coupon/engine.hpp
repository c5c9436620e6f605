#pragma once

#include <cstdint>

#include "coupon/group_model.hpp"
#include "coupon/population.hpp"

namespace coupon {

/// Default largest m for which the 2^m-term sum is evaluated.
inline constexpr int kDefaultExactCap = 24;
/// Hard ceiling on the configurable cap (the weighted tables hold 2^m doubles).
inline constexpr int kMaxExactCap = 30;

struct EngineOptions {
  int exact_cap = kDefaultExactCap;
};

/// Expected number of groups to complete the collection, with diagnostics.
struct ExpectationResult {
  double value = 0.0;
  std::uint64_t terms_evaluated = 0;
  /// Sum of |term| over |value|; large values flag precision loss.
  double cancellation_ratio = 1.0;
  /// Largest |S| whose term is not the constant +-1.
  int truncated_at = 0;
};

/// Evaluates E = sum over nonempty S of (-1)^(|S|+1) / (1 - q(S)), where q(S)
/// is the probability that a group avoids every type in S. Subsets are
/// visited in increasing bitmask order and accumulated with compensated
/// summation; terms with q(S) = 0 contribute +-1.
///
/// Throws CapacityError when m exceeds options.exact_cap and DivergenceError
/// when some type can never be drawn (q(S) = 1 for a nonempty S).
ExpectationResult inclusion_exclusion_expectation(const GroupModel& model, const EngineOptions& options = {});

/// m * H_m, the single-arrival uniform expectation.
double uniform_single_expectation(int m);

/// Closed-form alternating sum for UniformDistinct{m, g}, 1 <= g < m.
double uniform_group_expectation(int m, int g);

/// inclusion_exclusion_expectation for g individuals drawn without replacement.
ExpectationResult sampling_expectation(const Population& population, int g, const EngineOptions& options = {});

/// Mean waiting time 1 / (1 - q({type})) until the given 0-based type first appears.
double first_occurrence_expectation(const GroupModel& model, int type);

}  // namespace coupon
