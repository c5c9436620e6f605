#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coupon {

/// A finite population of N individuals split into m types with counts N_1..N_m.
class Population {
 public:
  /// Throws InputError unless 1 <= m <= kMaxTypes and every count is >= 1.
  explicit Population(std::vector<std::uint64_t> counts);

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t count(int type) const { return counts_[static_cast<std::size_t>(type)]; }
  std::uint64_t total() const { return total_; }
  int types() const { return static_cast<int>(counts_.size()); }

  bool operator==(const Population&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Zipf-Mandelbrot weights p_i proportional to (c + i)^-theta for i = 1..m.
/// Requires m >= 1, c >= 0 and theta in [1, 2].
std::vector<double> mandelbrot_weights(int m, double c, double theta);

/// Rounds N * p_i to integer counts, each at least 1, then applies a
/// largest-remainder correction so the counts sum to exactly N.
Population population_from_weights(std::span<const double> p, std::uint64_t total);

/// Checks p is finite, nonnegative and sums to 1 within 1e-9; returns it renormalized.
std::vector<double> validated_probabilities(std::span<const double> p, const char* what);

}  // namespace coupon
