#include "coupon/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <string>
#include <thread>

#include "coupon/errors.hpp"
#include "coupon/philox.hpp"

namespace coupon {
namespace {

using Bits = SubsetMask::Bits;
using Outcomes = std::map<Bits, double>;

void require_support(double size, const GroupModel& model) {
  if (size > static_cast<double>(kMaxChainSupport)) {
    throw CapacityError("group-content enumeration for " + std::string(kind_name(model.kind())) + " has " +
                            std::to_string(size) + " patterns, above the limit of " + std::to_string(kMaxChainSupport),
                        static_cast<int>(kMaxChainSupport));
  }
}

// Multinomial: slot counts k_i over types, weight g! / prod k_i! * prod p_i^k_i.
void enumerate_iid(const IidWithinGroup& v, std::size_t type, int left, Bits mask, double weight, Outcomes& out) {
  if (left == 0) {
    out[mask] += weight;
    return;
  }
  if (type == v.p.size()) return;
  const double p = v.p[type];
  double factor = 1.0;
  for (int k = 0; k <= left; ++k) {
    if (k > 0) {
      if (p <= 0.0) break;
      factor *= p;
    }
    enumerate_iid(v, type + 1, left - k, k > 0 ? mask | (Bits{1} << type) : mask,
                  weight * binomial(left, k) * factor, out);
  }
}

// Multivariate hypergeometric: weight prod C(N_i, k_i) / C(N, g). Carried in
// logs only when C(N, g) leaves double range.
struct Hypergeometric {
  std::span<const std::uint64_t> counts;
  bool use_logs = false;
  double norm = 1.0;
  Outcomes* out = nullptr;

  void run(std::size_t type, std::uint64_t left, Bits mask, double weight) const {
    if (left == 0) {
      (*out)[mask] += use_logs ? std::exp(weight - norm) : weight / norm;
      return;
    }
    if (type == counts.size()) return;
    const std::uint64_t most = std::min(left, counts[type]);
    for (std::uint64_t k = 0; k <= most; ++k) {
      const auto n = static_cast<std::int64_t>(counts[type]);
      const auto kk = static_cast<std::int64_t>(k);
      const double next = use_logs ? weight + log_binomial(n, kk) : weight * binomial(n, kk);
      run(type + 1, left - k, k > 0 ? mask | (Bits{1} << type) : mask, next);
    }
  }

  static double log_binomial(std::int64_t n, std::int64_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0);
  }
};

// Ordered draft sequences, each weighted by the successive-sampling product.
void enumerate_draft(const DraftLottery& v, int left, Bits chosen, double weight, double remaining, Outcomes& out) {
  if (left == 0) {
    out[chosen] += weight;
    return;
  }
  for (std::size_t t = 0; t < v.p.size(); ++t) {
    if (v.p[t] <= 0.0 || ((chosen >> t) & 1U)) continue;
    enumerate_draft(v, left - 1, chosen | (Bits{1} << t), weight * v.p[t] / remaining, remaining - v.p[t], out);
  }
}

}  // namespace

std::vector<GroupOutcome> group_content_distribution(const GroupModel& model) {
  const int m = model.types();
  const int g = model.group_size();
  Outcomes outcomes;

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniformDistinct>) {
          require_support(binomial(m, g), model);
          const double w = 1.0 / binomial(m, g);
          for (SubsetMask s : lexicographic_subsets(m, g)) outcomes[s.bits()] += w;
        } else if constexpr (std::is_same_v<T, WeightedDistinct>) {
          const auto masks = model.group_masks();
          for (std::size_t i = 0; i < masks.size(); ++i) {
            if (v.weights[i] > 0.0) outcomes[masks[i].bits()] += v.weights[i];
          }
        } else if constexpr (std::is_same_v<T, IidWithinGroup>) {
          require_support(binomial(g + m - 1, m - 1), model);
          enumerate_iid(v, 0, g, 0, 1.0, outcomes);
        } else if constexpr (std::is_same_v<T, WithoutReplacement>) {
          require_support(binomial(g + m - 1, m - 1), model);
          const auto n = static_cast<std::int64_t>(v.population.total());
          Hypergeometric walk{v.population.counts(), false, binomial(n, g), &outcomes};
          if (!std::isfinite(walk.norm)) {
            walk.use_logs = true;
            walk.norm = Hypergeometric::log_binomial(n, g);
          }
          walk.run(0, static_cast<std::uint64_t>(g), 0, walk.use_logs ? 0.0 : 1.0);
        } else {
          double sequences = 1.0;
          for (int j = 0; j < g; ++j) sequences *= m - j;
          require_support(sequences, model);
          enumerate_draft(v, g, 0, 1.0, 1.0, outcomes);
        }
      },
      model.params());

  std::vector<GroupOutcome> out;
  out.reserve(outcomes.size());
  for (const auto& [bits, p] : outcomes) {
    if (p > 0.0) out.push_back({SubsetMask(bits), p});
  }
  return out;
}

ChainSolution chain_expectation(const GroupModel& model) {
  const int m = model.types();
  if (m > kMaxChainTypes) {
    throw CapacityError("chain solver handles at most " + std::to_string(kMaxChainTypes) + " types", kMaxChainTypes);
  }
  const auto support = group_content_distribution(model);
  const Bits full = SubsetMask::full(m).bits();

  ChainSolution solution;
  auto& value = solution.state_values;
  value.assign(std::size_t{1} << m, 0.0);
  // E(C) = (1 + sum_{G not in C} P(G) E(C u G)) / P(group brings a new type).
  // Every successor C u G is numerically larger than C, so a descending sweep
  // sees it already solved.
  for (Bits c = full; c-- > 0;) {
    double leave = 0.0;
    double acc = 1.0;
    for (const auto& [group, p] : support) {
      const Bits next = c | group.bits();
      if (next == c) continue;
      leave += p;
      acc += p * value[next];
    }
    if (leave <= 0.0) {
      const SubsetMask missing(full ^ c);
      throw DivergenceError("no group ever contains a type of " + missing.to_string(), missing);
    }
    value[c] = acc / leave;
  }
  solution.expected_from_empty = value[0];
  return solution;
}

SimEstimate simulate_collection(const GroupModel& model, std::uint64_t trials, std::uint64_t seed,
                                const SimOptions& options) {
  if (trials < 1) throw InputError("simulation needs at least one trial");
  const Bits full = SubsetMask::full(model.types()).bits();
  if (model.collectable().bits() != full) {
    const SubsetMask missing(full & ~model.collectable().bits());
    throw DivergenceError("types " + missing.to_string() + " never appear in a group; the collection cannot complete",
                          missing);
  }

  std::vector<std::uint64_t> draws(trials);
  std::atomic<bool> failed{false};

  auto run_trials = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end && !failed.load(std::memory_order_relaxed); ++t) {
      PhiloxStream rng(seed, t);
      Bits collected = 0;
      std::uint64_t n = 0;
      while (collected != full) {
        if (n == options.draw_cap) {
          failed.store(true);
          return;
        }
        collected |= sample_group(model, rng).bits();
        ++n;
      }
      draws[t] = n;
    }
  };

  unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
  if (workers <= 1) {
    run_trials(0, trials);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run_trials, trials * w / workers, trials * (w + 1) / workers);
    }
  }
  if (failed) {
    throw DivergenceError("a trial drew " + std::to_string(options.draw_cap) +
                              " groups without completing the collection",
                          SubsetMask{});
  }

  // Exact integer moments, so the estimate is independent of worker layout.
  Uint128 sum = 0;
  Uint128 sum_sq = 0;
  for (std::uint64_t d : draws) {
    sum += d;
    sum_sq += static_cast<Uint128>(d) * d;
  }
  const auto n = static_cast<long double>(trials);
  SimEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.mean = static_cast<double>(static_cast<long double>(sum) / n);
  if (trials > 1) {
    const Uint128 spread = sum_sq * trials - sum * sum;
    const long double variance = static_cast<long double>(spread) / (n * (n - 1));
    est.std_error = static_cast<double>(std::sqrt(variance / n));
  }
  est.ci_low = est.mean - kNormalQuantile975 * est.std_error;
  est.ci_high = est.mean + kNormalQuantile975 * est.std_error;
  return est;
}

}  // namespace coupon
