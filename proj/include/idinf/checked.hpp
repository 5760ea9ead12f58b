#ifndef IDINF_CHECKED_HPP_
#define IDINF_CHECKED_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace idinf {

  using Int = std::int64_t;

  // Raised whenever an exact integer result does not fit in Int. Nothing in
  // the library wraps silently.
  class OverflowError : public std::overflow_error {
   public:
    explicit OverflowError(std::string const& what)
        : std::overflow_error(what) {}
  };

  inline Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return r;
  }

  inline Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in subtraction");
    }
    return r;
  }

  inline Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  inline Int checked_neg(Int x) {
    return checked_sub(0, x);
  }

}  // namespace idinf

#endif  // IDINF_CHECKED_HPP_
