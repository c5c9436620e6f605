#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace coupon {

/// Largest number of coupon types representable in a SubsetMask.
inline constexpr int kMaxTypes = 64;

/// A set of coupon types {0..m-1} stored as a bitmask. Type i is bit i.
class SubsetMask {
 public:
  using Bits = std::uint64_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Bits bits) : bits_(bits) {}

  static constexpr SubsetMask of(std::initializer_list<int> types) {
    Bits b = 0;
    for (int t : types) b |= Bits{1} << t;
    return SubsetMask(b);
  }

  /// Every type of an m-type alphabet.
  static constexpr SubsetMask full(int m) {
    return SubsetMask(m >= kMaxTypes ? ~Bits{0} : (Bits{1} << m) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int type) const { return (bits_ >> type) & 1U; }
  constexpr bool intersects(SubsetMask o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

  /// True when no bit at or above position m is set.
  constexpr bool valid_for(int m) const { return subset_of(full(m)); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const SubsetMask&) const = default;

  /// "{1,3}" using 1-based type labels.
  std::string to_string() const;

 private:
  Bits bits_ = 0;
};

}  // namespace coupon
