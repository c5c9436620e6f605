#include <algorithm>
#include <array>

#include "coupon/group_model.hpp"
#include "coupon/philox.hpp"

namespace coupon {
namespace {

// Index of the first cumulative entry exceeding u * total, skipping
// zero-weight entries that rounding might otherwise land on.
std::size_t pick(std::span<const double> cumulative, double u) {
  const double target = u * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) --it;
  auto idx = static_cast<std::size_t>(it - cumulative.begin());
  while (idx > 0 && cumulative[idx] == cumulative[idx - 1]) --idx;
  return idx;
}

}  // namespace

SubsetMask sample_group(const GroupModel& model, PhiloxStream& rng) {
  const int m = model.types();
  const int g = model.group_size();

  return std::visit(
      [&](const auto& v) -> SubsetMask {
        using T = std::decay_t<decltype(v)>;
        SubsetMask out;
        if constexpr (std::is_same_v<T, UniformDistinct>) {
          // Floyd's algorithm for a uniform g-subset.
          for (int j = m - g; j < m; ++j) {
            const auto t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
            out |= SubsetMask::of({out.contains(t) ? j : t});
          }
        } else if constexpr (std::is_same_v<T, WeightedDistinct>) {
          out = model.group_masks()[pick(model.cumulative(), rng.unit())];
        } else if constexpr (std::is_same_v<T, IidWithinGroup>) {
          for (int j = 0; j < g; ++j) out |= SubsetMask::of({static_cast<int>(pick(model.cumulative(), rng.unit()))});
        } else if constexpr (std::is_same_v<T, WithoutReplacement>) {
          const auto counts = v.population.counts();
          std::array<std::uint64_t, kMaxTypes> taken{};
          const std::uint64_t n = v.population.total();
          for (int j = 0; j < g; ++j) {
            std::uint64_t r = rng.below(n - static_cast<std::uint64_t>(j));
            for (int i = 0; i < m; ++i) {
              const std::uint64_t left = counts[static_cast<std::size_t>(i)] - taken[static_cast<std::size_t>(i)];
              if (r < left) {
                ++taken[static_cast<std::size_t>(i)];
                out |= SubsetMask::of({i});
                break;
              }
              r -= left;
            }
          }
        } else {
          // Sequential weighted draws restricted to types not yet held, which
          // is the same law as redrawing on duplicates.
          double remaining = 1.0;
          for (int j = 0; j < g; ++j) {
            double target = rng.unit() * remaining;
            int chosen = -1;
            for (int i = 0; i < m; ++i) {
              const double w = v.p[static_cast<std::size_t>(i)];
              if (w <= 0.0 || out.contains(i)) continue;
              chosen = i;
              if (target < w) break;
              target -= w;
            }
            out |= SubsetMask::of({chosen});
            remaining -= v.p[static_cast<std::size_t>(chosen)];
          }
        }
        return out;
      },
      model.params());
}

}  // namespace coupon
