#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coupon/population.hpp"
#include "coupon/subset_mask.hpp"

namespace coupon {

class PhiloxStream;

/// All C(m, g) groups of g distinct types are equally likely.
struct UniformDistinct {
  int types = 0;
  int group_size = 0;
};

/// Groups of g distinct types with explicit weights, one per g-subset in
/// lexicographic order of the sorted type tuples.
struct WeightedDistinct {
  int types = 0;
  int group_size = 0;
  std::vector<double> weights;
};

/// Each of the g slots is independently type k with probability p_k.
struct IidWithinGroup {
  std::vector<double> p;
  int group_size = 0;
};

/// g individuals drawn without replacement from a finite population.
struct WithoutReplacement {
  Population population;
  int group_size = 0;
};

/// Types drawn one at a time in proportion to p, duplicates discarded, until
/// g distinct types are held.
struct DraftLottery {
  std::vector<double> p;
  int group_size = 0;
};

enum class ModelKind { kUniformDistinct, kWeightedDistinct, kIidWithinGroup, kWithoutReplacement, kDraftLottery };

/// Largest group size accepted by the draft-lottery model.
inline constexpr int kMaxDraftGroupSize = 8;

/// An immutable, validated group-arrival distribution over m coupon types.
///
/// Construct through the named factories; each validates its parameters and
/// throws InputError on violation. g = 1 is accepted by every variant, which
/// makes single arrivals a special case. Probability vectors must be
/// nonnegative and sum to 1 within 1e-9; they are renormalized on entry.
class GroupModel {
 public:
  using Params = std::variant<UniformDistinct, WeightedDistinct, IidWithinGroup, WithoutReplacement, DraftLottery>;

  static GroupModel uniform_distinct(int m, int g);
  static GroupModel weighted_distinct(int m, int g, std::vector<double> weights);
  static GroupModel iid_within_group(std::vector<double> p, int g);
  static GroupModel without_replacement(Population population, int g);
  static GroupModel draft_lottery(std::vector<double> p, int g);

  const Params& params() const { return params_; }
  ModelKind kind() const { return static_cast<ModelKind>(params_.index()); }
  int types() const { return types_; }
  int group_size() const { return group_size_; }

  /// Types that appear in at least one group of positive probability.
  SubsetMask collectable() const { return collectable_; }

  /// Lexicographic g-subset masks; populated for WeightedDistinct only.
  std::span<const SubsetMask> group_masks() const { return group_masks_; }
  /// Running sums of the per-group (WeightedDistinct) or per-type (IID, draft) weights.
  std::span<const double> cumulative() const { return cumulative_; }

  /// Short human-readable description, e.g. "without-replacement g=2 counts=[10,100]".
  std::string describe() const;

 private:
  GroupModel(Params params, int types, int group_size);

  Params params_;
  int types_ = 0;
  int group_size_ = 0;
  SubsetMask collectable_;
  std::vector<SubsetMask> group_masks_;
  std::vector<double> cumulative_;
};

std::string_view kind_name(ModelKind kind);

/// All g-subsets of {0..m-1} in lexicographic order of their sorted tuples.
std::vector<SubsetMask> lexicographic_subsets(int m, int g);

/// Binomial coefficient as a double; 0 when k < 0 or k > n.
double binomial(std::int64_t n, std::int64_t k);

/// Probability that one drawn group contains none of the types in s.
/// Throws InputError if s names a type outside the model.
double avoidance_probability(const GroupModel& model, SubsetMask s);

/// Draws one group and returns the set of distinct types it contains.
SubsetMask sample_group(const GroupModel& model, PhiloxStream& rng);

}  // namespace coupon
