#include "coupon/population.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "coupon/errors.hpp"
#include "coupon/subset_mask.hpp"

namespace coupon {

Population::Population(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty() || counts_.size() > static_cast<std::size_t>(kMaxTypes)) {
    throw InputError("population must have between 1 and " + std::to_string(kMaxTypes) + " types");
  }
  for (std::uint64_t c : counts_) {
    if (c == 0) throw InputError("every type must have at least one individual");
    total_ += c;
  }
}

std::vector<double> validated_probabilities(std::span<const double> p, const char* what) {
  if (p.empty() || p.size() > static_cast<std::size_t>(kMaxTypes)) {
    throw InputError(std::string(what) + ": length must be between 1 and " + std::to_string(kMaxTypes));
  }
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) throw InputError(std::string(what) + ": entries must be finite and >= 0");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError(std::string(what) + ": entries must sum to 1 (got " + std::to_string(sum) + ")");
  }
  std::vector<double> out(p.begin(), p.end());
  for (double& x : out) x /= sum;
  return out;
}

std::vector<double> mandelbrot_weights(int m, double c, double theta) {
  if (m < 1 || m > kMaxTypes) throw InputError("mandelbrot: m must be between 1 and " + std::to_string(kMaxTypes));
  if (!(c >= 0.0) || !std::isfinite(c)) throw InputError("mandelbrot: c must be >= 0");
  if (!(theta >= 1.0 && theta <= 2.0)) throw InputError("mandelbrot: theta must lie in [1, 2]");
  std::vector<double> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = std::pow(c + (i + 1), -theta);
  // Smallest first, so the normalizer is accumulated accurately.
  double total = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) total += *it;
  for (double& x : w) x /= total;
  return w;
}

Population population_from_weights(std::span<const double> p, std::uint64_t total) {
  const auto probs = validated_probabilities(p, "population weights");
  const std::size_t m = probs.size();
  if (total < m) throw InputError("population size N must be at least the number of types");

  std::vector<std::uint64_t> counts(m);
  std::vector<double> target(m);
  for (std::size_t i = 0; i < m; ++i) {
    target[i] = static_cast<double>(total) * probs[i];
    counts[i] = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(target[i])));
  }
  auto sum = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});

  // One unit at a time: add where the rounding fell furthest short, remove
  // where it overshot most (never below one). Ties go to the lower index.
  while (sum < total) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (target[i] - counts[i] > target[best] - counts[best]) best = i;
    }
    ++counts[best];
    ++sum;
  }
  while (sum > total) {
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (counts[i] <= 1) continue;
      if (best == m || target[i] - counts[i] < target[best] - counts[best]) best = i;
    }
    --counts[best];
    --sum;
  }
  return Population(std::move(counts));
}

}  // namespace coupon
