#pragma once

#include <cmath>

namespace coupon {

/// Neumaier's variant of Kahan summation. Also tracks the sum of magnitudes
/// so callers can report how much an alternating series cancelled.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::abs(x);
  }

  double value() const { return sum_ + comp_; }
  double magnitude() const { return magnitude_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace coupon
