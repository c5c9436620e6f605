#include "coupon/engine.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "coupon/errors.hpp"
#include "coupon/summation.hpp"

namespace coupon {
namespace {

using Bits = SubsetMask::Bits;

// Per-subset totals of a per-type quantity, stored as two half-width tables
// so the lattice costs O(2^(m/2)) memory: total(S) = low[S & lo] + high[S >> h].
template <class T>
class SplitTotals {
 public:
  template <class Range>
  explicit SplitTotals(const Range& per_type) {
    const int m = static_cast<int>(std::size(per_type));
    low_bits_ = m / 2;
    low_ = build(per_type, 0, low_bits_);
    high_ = build(per_type, low_bits_, m);
  }

  T operator()(Bits s) const {
    return low_[s & ((Bits{1} << low_bits_) - 1)] + high_[s >> low_bits_];
  }

 private:
  // Shared-prefix DP: total(S) = total(S minus lowest bit) + value(lowest bit).
  template <class Range>
  static std::vector<T> build(const Range& per_type, int from, int to) {
    std::vector<T> table(std::size_t{1} << (to - from));
    for (std::size_t s = 1; s < table.size(); ++s) {
      const int low = std::countr_zero(s);
      table[s] = table[s & (s - 1)] + static_cast<T>(per_type[static_cast<std::size_t>(from + low)]);
    }
    return table;
  }

  int low_bits_ = 0;
  std::vector<T> low_;
  std::vector<T> high_;
};

// 1 - q(S) together with whether q(S) = 0, i.e. the term is the constant +-1.
struct Escape {
  double value;
  bool certain;
};

template <class EscapeFn>
ExpectationResult master_sum(int m, EscapeFn escape) {
  CompensatedSum sum;
  ExpectationResult result;
  const Bits end = Bits{1} << m;
  for (Bits s = 1; s < end; ++s) {
    const Escape e = escape(s);
    const int k = std::popcount(s);
    const double magnitude = e.certain ? 1.0 : 1.0 / e.value;
    sum.add(k % 2 == 1 ? magnitude : -magnitude);
    if (!e.certain) result.truncated_at = std::max(result.truncated_at, k);
  }
  result.value = sum.value();
  result.terms_evaluated = end - 1;
  result.cancellation_ratio = std::max(1.0, sum.magnitude() / std::abs(result.value));
  return result;
}

// F[U] = sum of group weights over groups contained in U (subset-sum transform).
void subset_sum_transform(std::vector<double>& table, int m) {
  for (int b = 0; b < m; ++b) {
    const Bits bit = Bits{1} << b;
    for (Bits s = 0; s < table.size(); ++s) {
      if (s & bit) table[s] += table[s ^ bit];
    }
  }
}

// Escape lookup for distinct-type groups given per-group-mask weights.
auto distinct_escape(std::vector<double> weights_by_mask, int m) {
  subset_sum_transform(weights_by_mask, m);
  const Bits full = SubsetMask::full(m).bits();
  return [table = std::move(weights_by_mask), full](Bits s) {
    const double q = table[full ^ s];
    return Escape{1.0 - q, q <= 0.0};
  };
}

// Probability that the first |A| draft picks are exactly the set A, for every
// A with |A| <= g, then kept only at |A| = g.
std::vector<double> draft_group_weights(const DraftLottery& v, int m) {
  const SplitTotals<double> mass(v.p);
  const Bits full = SubsetMask::full(m).bits();
  std::vector<double> h(std::size_t{1} << m, 0.0);
  h[0] = 1.0;
  for (Bits a = 1; a < h.size(); ++a) {
    if (std::popcount(a) > v.group_size) continue;
    double acc = 0.0;
    for (Bits rest = a; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      const Bits prev = a ^ (Bits{1} << t);
      const double remaining = mass(full ^ prev);
      if (h[prev] > 0.0 && remaining > 0.0) acc += h[prev] * v.p[static_cast<std::size_t>(t)] / remaining;
    }
    h[a] = acc;
  }
  for (Bits a = 0; a < h.size(); ++a) {
    if (std::popcount(a) != v.group_size) h[a] = 0.0;
  }
  return h;
}

void check_cap(int m, const EngineOptions& options) {
  if (options.exact_cap < 1 || options.exact_cap > kMaxExactCap) {
    throw InputError("exact cap must lie in [1, " + std::to_string(kMaxExactCap) + "]");
  }
  if (m > options.exact_cap) {
    throw CapacityError("exact evaluation needs 2^" + std::to_string(m) + " terms; m = " + std::to_string(m) +
                            " exceeds the exact cap of " + std::to_string(options.exact_cap) +
                            " (use simulation, or raise --exact-cap)",
                        options.exact_cap);
  }
}

void check_collectable(const GroupModel& model) {
  const SubsetMask missing(SubsetMask::full(model.types()).bits() & ~model.collectable().bits());
  if (missing.empty()) return;
  const SubsetMask first(Bits{1} << std::countr_zero(missing.bits()));
  throw DivergenceError("q(S) = 1 for S = " + first.to_string() + ": the collection can never be completed", first);
}

}  // namespace

ExpectationResult inclusion_exclusion_expectation(const GroupModel& model, const EngineOptions& options) {
  const int m = model.types();
  const int g = model.group_size();
  check_cap(m, options);
  check_collectable(model);

  return std::visit(
      [&](const auto& v) -> ExpectationResult {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniformDistinct>) {
          // 1 - C(m-k, g) / C(m, g), formed from the exact integer difference.
          const double all = binomial(m, g);
          std::vector<Escape> by_size(static_cast<std::size_t>(m) + 1);
          for (int k = 1; k <= m; ++k) {
            const double avoid = binomial(m - k, g);
            by_size[static_cast<std::size_t>(k)] = Escape{(all - avoid) / all, avoid == 0.0};
          }
          return master_sum(m, [&](Bits s) { return by_size[static_cast<std::size_t>(std::popcount(s))]; });
        } else if constexpr (std::is_same_v<T, WeightedDistinct>) {
          std::vector<double> table(std::size_t{1} << m, 0.0);
          const auto masks = model.group_masks();
          for (std::size_t i = 0; i < masks.size(); ++i) table[masks[i].bits()] += v.weights[i];
          return master_sum(m, distinct_escape(std::move(table), m));
        } else if constexpr (std::is_same_v<T, DraftLottery>) {
          return master_sum(m, distinct_escape(draft_group_weights(v, m), m));
        } else if constexpr (std::is_same_v<T, IidWithinGroup>) {
          const SplitTotals<double> mass(v.p);
          const Bits full = SubsetMask::full(m).bits();
          return master_sum(m, [&](Bits s) {
            const double hit = mass(s);
            const double miss = mass(full ^ s);
            if (miss <= 0.0) return Escape{1.0, true};
            // 1 - (1 - hit)^g, taking whichever side avoids cancellation.
            if (hit <= 0.5) return Escape{-std::expm1(g * std::log1p(-hit)), false};
            return Escape{1.0 - std::pow(miss, g), false};
          });
        } else {
          const SplitTotals<std::uint64_t> counts(v.population.counts());
          const std::uint64_t n = v.population.total();
          const auto draws = static_cast<std::uint64_t>(g);
          return master_sum(m, [&](Bits s) {
            // q(S) = P(N - a, g) / P(N, g) = prod_j (1 - a / (N - j)).
            const std::uint64_t a = counts(s);
            if (n - a < draws) return Escape{1.0, true};
            double log_q = 0.0;
            for (std::uint64_t j = 0; j < draws; ++j) {
              log_q += std::log1p(-static_cast<double>(a) / static_cast<double>(n - j));
            }
            return Escape{-std::expm1(log_q), false};
          });
        }
      },
      model.params());
}

double uniform_single_expectation(int m) {
  if (m < 1) throw InputError("uniform single-arrival expectation needs m >= 1");
  double harmonic = 0.0;
  for (int i = m; i >= 1; --i) harmonic += 1.0 / i;
  return m * harmonic;
}

double uniform_group_expectation(int m, int g) {
  if (g < 1 || g >= m) throw InputError("uniform group expectation needs 1 <= g < m");
  const double all = binomial(m, g);
  CompensatedSum sum;
  for (int k = 1; k <= m - g; ++k) {
    const double term = binomial(m, k) * all / (all - binomial(m - k, g));
    sum.add(k % 2 == 1 ? term : -term);
  }
  // Subsets larger than m - g meet every group; their terms are +-C(m, k).
  for (int k = 1; k <= g; ++k) {
    const double term = binomial(m, m - g + k);
    sum.add((m - g + k) % 2 == 1 ? term : -term);
  }
  return sum.value();
}

ExpectationResult sampling_expectation(const Population& population, int g, const EngineOptions& options) {
  return inclusion_exclusion_expectation(GroupModel::without_replacement(population, g), options);
}

double first_occurrence_expectation(const GroupModel& model, int type) {
  if (type < 0 || type >= model.types()) {
    throw InputError("type index " + std::to_string(type) + " outside 0.." + std::to_string(model.types() - 1));
  }
  const auto s = SubsetMask::of({type});
  if (!model.collectable().contains(type)) {
    throw DivergenceError("type " + std::to_string(type + 1) + " never appears in a group", s);
  }
  return 1.0 / (1.0 - avoidance_probability(model, s));
}

}  // namespace coupon
