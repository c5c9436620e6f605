#pragma once

#include <stdexcept>
#include <string>

#include "coupon/subset_mask.hpp"

namespace coupon {

/// Malformed or out-of-domain input (bad probability vector, g out of range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that cannot be computed.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested computation exceeds a configured size cap.
class CapacityError : public ComputationError {
 public:
  CapacityError(const std::string& what, int cap) : ComputationError(what), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// The collection can never be completed: some nonempty set of types is never drawn.
class DivergenceError : public ComputationError {
 public:
  DivergenceError(const std::string& what, SubsetMask offending)
      : ComputationError(what), offending_(offending) {}
  SubsetMask offending() const noexcept { return offending_; }

 private:
  SubsetMask offending_;
};

}  // namespace coupon
