#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "gstp/error.hpp"

namespace gstp {

/// Exact non-negative cost. Every arithmetic operation is checked and
/// throws ErrorKind::overflow instead of wrapping.
class Cost {
 public:
  using value_type = std::uint64_t;

  constexpr Cost() noexcept = default;
  constexpr explicit Cost(value_type value) noexcept : value_(value) {}

  constexpr value_type value() const noexcept { return value_; }

  friend constexpr auto operator<=>(Cost, Cost) noexcept = default;

  friend Cost operator+(Cost lhs, Cost rhs) {
    value_type out;
    if (__builtin_add_overflow(lhs.value_, rhs.value_, &out)) {
      throw Error(ErrorKind::overflow, "cost addition overflows");
    }
    return Cost(out);
  }

  friend Cost operator-(Cost lhs, Cost rhs) {
    if (rhs.value_ > lhs.value_) {
      throw Error(ErrorKind::overflow, "cost subtraction underflows");
    }
    return Cost(lhs.value_ - rhs.value_);
  }

  friend Cost operator*(Cost lhs, value_type factor) {
    value_type out;
    if (__builtin_mul_overflow(lhs.value_, factor, &out)) {
      throw Error(ErrorKind::overflow, "cost multiplication overflows");
    }
    return Cost(out);
  }

  Cost& operator+=(Cost rhs) { return *this = *this + rhs; }

  friend std::ostream& operator<<(std::ostream& os, Cost c) { return os << c.value_; }

 private:
  value_type value_ = 0;
};

}  // namespace gstp
