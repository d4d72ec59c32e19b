// Overflow-checked 64-bit integer arithmetic.

#ifndef TANGLEKIT_CHECKED_HPP_
#define TANGLEKIT_CHECKED_HPP_

#include <cstdint>
#include <limits>

#include "errors.hpp"

namespace tanglekit {

  using Int = std::int64_t;

  namespace checked {

    inline Int add(Int x, Int y) {
      Int r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in addition");
      }
      return r;
    }

    inline Int sub(Int x, Int y) {
      Int r;
      if (__builtin_sub_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in subtraction");
      }
      return r;
    }

    inline Int mul(Int x, Int y) {
      Int r;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw OverflowError("integer overflow in multiplication");
      }
      return r;
    }

    inline Int neg(Int x) {
      if (x == std::numeric_limits<Int>::min()) {
        throw OverflowError("integer overflow in negation");
      }
      return -x;
    }

    inline Int abs(Int x) {
      return x < 0 ? neg(x) : x;
    }

    // x * y + z * w
    inline Int dot(Int x, Int y, Int z, Int w) {
      return add(mul(x, y), mul(z, w));
    }

  }  // namespace checked
}  // namespace tanglekit

#endif  // TANGLEKIT_CHECKED_HPP_
