#include "idinf/isometry.hpp"

#include <stdexcept>

namespace idinf {

  Isometry::Isometry(int sign, Int shift) : _sign(sign), _shift(shift) {
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("isometry sign must be +1 or -1");
    }
  }

  Int Isometry::apply(Int x) const {
    return checked_add(_sign == 1 ? x : checked_neg(x), _shift);
  }

  Isometry Isometry::inverse() const {
    // x -> e x + a is undone by y -> e y - e a.
    return Isometry(_sign, _sign == 1 ? checked_neg(_shift) : _shift);
  }

  Isometry Isometry::then(Isometry const& next) const {
    // (e2 (e1 x + a1) + a2) = e1 e2 x + (e2 a1 + a2)
    Int moved = next._sign == 1 ? _shift : checked_neg(_shift);
    return Isometry(_sign * next._sign, checked_add(moved, next._shift));
  }

}  // namespace idinf
