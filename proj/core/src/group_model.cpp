#include "coupon/group_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coupon/errors.hpp"

namespace coupon {
namespace {

void check_distinct_size(int m, int g, const char* what) {
  if (m < 1 || m > kMaxTypes) throw InputError(std::string(what) + ": m must be between 1 and 64");
  if (g < 1 || (g >= m && g != 1)) throw InputError(std::string(what) + ": group size must satisfy 1 <= g < m");
}

SubsetMask positive_types(std::span<const double> p) {
  SubsetMask out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) out |= SubsetMask::of({static_cast<int>(i)});
  }
  return out;
}

std::vector<double> running_sum(std::span<const double> w) {
  std::vector<double> out(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = acc += w[i];
  return out;
}

template <class Range>
void write_list(std::ostream& os, const Range& r) {
  os << '[';
  bool first = true;
  for (const auto& x : r) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ']';
}

// Sum over ordered sequences of g distinct types outside `avoid` of the
// successive-sampling probability prod_j p[t_j] / (1 - sum_{l<j} p[t_l]).
double draft_sequences(std::span<const double> p, int depth, SubsetMask chosen, SubsetMask avoid, double remaining) {
  if (depth == 0) return 1.0;
  double total = 0.0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    const int type = static_cast<int>(t);
    if (p[t] <= 0.0 || chosen.contains(type) || avoid.contains(type)) continue;
    total += p[t] / remaining *
             draft_sequences(p, depth - 1, chosen | SubsetMask::of({type}), avoid, remaining - p[t]);
  }
  return total;
}

}  // namespace

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kMaxTypes; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string_view kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kUniformDistinct:
      return "uniform-distinct";
    case ModelKind::kWeightedDistinct:
      return "weighted-distinct";
    case ModelKind::kIidWithinGroup:
      return "iid-within-group";
    case ModelKind::kWithoutReplacement:
      return "without-replacement";
    case ModelKind::kDraftLottery:
      return "draft-lottery";
  }
  return "unknown";
}

double binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::int64_t j = 1; j <= k; ++j) out = out * static_cast<double>(n - k + j) / static_cast<double>(j);
  return std::round(out) < 9.0e15 ? std::round(out) : out;
}

std::vector<SubsetMask> lexicographic_subsets(int m, int g) {
  std::vector<SubsetMask> out;
  if (g < 0 || g > m) return out;
  std::vector<int> idx(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    SubsetMask s;
    for (int i : idx) s |= SubsetMask::of({i});
    out.push_back(s);
    int pos = g - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - g + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < g; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

GroupModel::GroupModel(Params params, int types, int group_size)
    : params_(std::move(params)), types_(types), group_size_(group_size) {}

GroupModel GroupModel::uniform_distinct(int m, int g) {
  check_distinct_size(m, g, "uniform-distinct");
  GroupModel model(UniformDistinct{m, g}, m, g);
  model.collectable_ = SubsetMask::full(m);
  return model;
}

GroupModel GroupModel::weighted_distinct(int m, int g, std::vector<double> weights) {
  check_distinct_size(m, g, "weighted-distinct");
  const double groups = binomial(m, g);
  if (static_cast<double>(weights.size()) != groups) {
    throw InputError("weighted-distinct: expected C(m, g) = " + std::to_string(static_cast<std::uint64_t>(groups)) +
                     " group weights, got " + std::to_string(weights.size()));
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InputError("weighted-distinct: weights must be finite and >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InputError("weighted-distinct: weights must sum to 1");
  for (double& w : weights) w /= sum;

  auto masks = lexicographic_subsets(m, g);
  SubsetMask collectable;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (weights[i] > 0.0) collectable |= masks[i];
  }
  auto cumulative = running_sum(weights);
  GroupModel model(WeightedDistinct{m, g, std::move(weights)}, m, g);
  model.collectable_ = collectable;
  model.group_masks_ = std::move(masks);
  model.cumulative_ = std::move(cumulative);
  return model;
}

GroupModel GroupModel::iid_within_group(std::vector<double> p, int g) {
  p = validated_probabilities(p, "iid-within-group p");
  if (g < 1) throw InputError("iid-within-group: group size must be >= 1");
  const int m = static_cast<int>(p.size());
  auto collectable = positive_types(p);
  auto cumulative = running_sum(p);
  GroupModel model(IidWithinGroup{std::move(p), g}, m, g);
  model.collectable_ = collectable;
  model.cumulative_ = std::move(cumulative);
  return model;
}

GroupModel GroupModel::without_replacement(Population population, int g) {
  if (g < 1 || static_cast<std::uint64_t>(g) > population.total()) {
    throw InputError("without-replacement: group size must satisfy 1 <= g <= N");
  }
  const int m = population.types();
  GroupModel model(WithoutReplacement{std::move(population), g}, m, g);
  model.collectable_ = SubsetMask::full(m);
  return model;
}

GroupModel GroupModel::draft_lottery(std::vector<double> p, int g) {
  p = validated_probabilities(p, "draft-lottery p");
  const int m = static_cast<int>(p.size());
  check_distinct_size(m, g, "draft-lottery");
  if (g > kMaxDraftGroupSize) {
    throw InputError("draft-lottery: group size is limited to " + std::to_string(kMaxDraftGroupSize));
  }
  auto collectable = positive_types(p);
  if (collectable.size() < g) throw InputError("draft-lottery: need at least g types with positive probability");
  auto cumulative = running_sum(p);
  GroupModel model(DraftLottery{std::move(p), g}, m, g);
  model.collectable_ = collectable;
  model.cumulative_ = std::move(cumulative);
  return model;
}

std::string GroupModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << kind_name(kind()) << " g=" << group_size_;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniformDistinct>) {
          os << " m=" << v.types;
        } else if constexpr (std::is_same_v<T, WeightedDistinct>) {
          os << " m=" << v.types << " q=";
          write_list(os, v.weights);
        } else if constexpr (std::is_same_v<T, WithoutReplacement>) {
          os << " counts=";
          write_list(os, v.population.counts());
        } else {
          os << " p=";
          write_list(os, v.p);
        }
      },
      params_);
  return os.str();
}

double avoidance_probability(const GroupModel& model, SubsetMask s) {
  const int m = model.types();
  if (!s.valid_for(m)) throw InputError("subset " + s.to_string() + " names a type outside 1.." + std::to_string(m));
  const int k = s.size();
  const int g = model.group_size();

  const double q = std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniformDistinct>) {
          return binomial(m - k, g) / binomial(m, g);
        } else if constexpr (std::is_same_v<T, WeightedDistinct>) {
          const auto masks = model.group_masks();
          double q = 0.0;
          for (std::size_t i = 0; i < masks.size(); ++i) {
            if (!masks[i].intersects(s)) q += v.weights[i];
          }
          return q;
        } else if constexpr (std::is_same_v<T, IidWithinGroup>) {
          double outside = 0.0;
          for (int i = 0; i < m; ++i) {
            if (!s.contains(i)) outside += v.p[static_cast<std::size_t>(i)];
          }
          return std::pow(outside, g);
        } else if constexpr (std::is_same_v<T, WithoutReplacement>) {
          // P(N - sum_S N_i, g) / P(N, g), with P(n, g) = 0 for n < g.
          const std::uint64_t n = v.population.total();
          std::uint64_t hit = 0;
          for (int i = 0; i < m; ++i) {
            if (s.contains(i)) hit += v.population.count(i);
          }
          if (n - hit < static_cast<std::uint64_t>(g)) return 0.0;
          double q = 1.0;
          for (int j = 0; j < g; ++j) q *= static_cast<double>(n - hit - j) / static_cast<double>(n - j);
          return q;
        } else {
          return draft_sequences(v.p, g, SubsetMask{}, s, 1.0);
        }
      },
      model.params());
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace coupon
