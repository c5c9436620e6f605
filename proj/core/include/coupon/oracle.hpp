#pragma once

#include <cstdint>
#include <vector>

#include "coupon/group_model.hpp"

namespace coupon {

/// Largest m accepted by chain_expectation.
inline constexpr int kMaxChainTypes = 20;
/// Largest enumerated group-content support accepted by chain_expectation.
inline constexpr std::uint64_t kMaxChainSupport = 10'000'000;
inline constexpr std::uint64_t kDefaultDrawCap = 10'000'000;
inline constexpr std::uint64_t kDefaultTrials = 100'000;

/// 97.5% standard normal quantile for the two-sided 95% interval.
inline constexpr double kNormalQuantile975 = 1.959963984540054;

struct SimEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SimOptions {
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned workers = 0;
  /// Groups drawn in one trial before the collection is declared impossible.
  std::uint64_t draw_cap = kDefaultDrawCap;
};

/// Monte Carlo estimate of the expected number of groups to collect all types.
///
/// Trial t draws from PhiloxStream(seed, t), so the estimate is a pure
/// function of (model, trials, seed). Throws DivergenceError when a trial
/// exceeds draw_cap or the model has a type that is never drawn.
SimEstimate simulate_collection(const GroupModel& model, std::uint64_t trials, std::uint64_t seed,
                                const SimOptions& options = {});

struct ChainSolution {
  double expected_from_empty = 0.0;
  /// Expected remaining groups, indexed by collected-set bitmask.
  std::vector<double> state_values;
};

/// One possible group content (the set of distinct types) and its probability.
struct GroupOutcome {
  SubsetMask types;
  double probability = 0.0;
};

/// Distribution of the set of types in one group, built by direct enumeration
/// of the model (subsets, multinomial or multivariate hypergeometric patterns,
/// or ordered draft sequences). Zero-probability outcomes are dropped.
std::vector<GroupOutcome> group_content_distribution(const GroupModel& model);

/// Exact expectation by backward recursion over the 2^m collected-set states
/// of the absorbing chain. Independent of the inclusion-exclusion engine.
ChainSolution chain_expectation(const GroupModel& model);

}  // namespace coupon
