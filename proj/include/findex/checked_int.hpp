#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace findex {

// Exact 64-bit signed arithmetic that throws on overflow instead of wrapping.
// Every index value in this library is carried by this type; the product
// formulas grow like n^4, so silent wraparound would be unacceptable.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design

  constexpr std::int64_t value() const { return value_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r))
      throw std::overflow_error("CheckedInt: overflow in addition");
    return CheckedInt(r);
  }

  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a.value_, b.value_, &r))
      throw std::overflow_error("CheckedInt: overflow in subtraction");
    return CheckedInt(r);
  }

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a.value_, b.value_, &r))
      throw std::overflow_error("CheckedInt: overflow in multiplication");
    return CheckedInt(r);
  }

  friend CheckedInt operator-(CheckedInt a) { return CheckedInt(0) - a; }

  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.value_; }

 private:
  std::int64_t value_ = 0;
};

inline CheckedInt square(CheckedInt x) { return x * x; }
inline CheckedInt cube(CheckedInt x) { return x * x * x; }

// x^e by repeated multiplication, overflow-checked. e must be small and nonnegative.
inline CheckedInt pow(CheckedInt x, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  CheckedInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace findex
