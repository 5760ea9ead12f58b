#ifndef IDINF_ISOMETRY_HPP_
#define IDINF_ISOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <functional>

#include "idinf/checked.hpp"

namespace idinf {

  // A global isometry of the integers, x -> sign * x + shift.
  //
  // Maps act on the right and compose left to right: (x)(g h) = ((x)g)h.
  // Every product in this library, for isometries and for partial
  // isometries alike, follows that convention.
  class Isometry {
   public:
    // The identity.
    constexpr Isometry() noexcept = default;

    // Throws std::invalid_argument unless sign is +1 or -1.
    Isometry(int sign, Int shift);

    static constexpr Isometry identity() noexcept {
      return Isometry();
    }
    static Isometry translation(Int shift) {
      return Isometry(+1, shift);
    }
    static Isometry reflection(Int shift) {
      return Isometry(-1, shift);
    }

    [[nodiscard]] constexpr int sign() const noexcept {
      return _sign;
    }
    [[nodiscard]] constexpr Int shift() const noexcept {
      return _shift;
    }
    [[nodiscard]] constexpr bool is_identity() const noexcept {
      return _sign == 1 && _shift == 0;
    }
    [[nodiscard]] constexpr bool is_reflection() const noexcept {
      return _sign == -1;
    }

    // sign * x + shift, with overflow reported as OverflowError.
    [[nodiscard]] Int apply(Int x) const;

    [[nodiscard]] Isometry inverse() const;

    // Apply *this first, then next.
    [[nodiscard]] Isometry then(Isometry const& next) const;

    friend constexpr bool operator==(Isometry const&, Isometry const&)
        = default;
    // Lexicographic on (sign, shift); reflections sort first.
    friend constexpr std::strong_ordering operator<=>(Isometry const&,
                                                      Isometry const&)
        = default;

   private:
    int _sign  = 1;
    Int _shift = 0;
  };

  // Right-action product: (x)(g * h) = ((x)g)h.
  inline Isometry operator*(Isometry const& g, Isometry const& h) {
    return g.then(h);
  }

  inline Int iso_apply(Isometry const& g, Int x) {
    return g.apply(x);
  }
  inline Isometry iso_compose(Isometry const& g1, Isometry const& g2) {
    return g1.then(g2);
  }
  inline Isometry iso_invert(Isometry const& g) {
    return g.inverse();
  }

}  // namespace idinf

template <>
struct std::hash<idinf::Isometry> {
  std::size_t operator()(idinf::Isometry const& g) const noexcept {
    return std::hash<idinf::Int>{}(g.shift()) * 2 + (g.sign() < 0 ? 1 : 0);
  }
};

#endif  // IDINF_ISOMETRY_HPP_
