#ifndef IDINF_CIRCLE_HPP_
#define IDINF_CIRCLE_HPP_

#include <cstddef>
#include <vector>

#include "idinf/isometry.hpp"

// Numeric picture of the unit group inside the compact group T^1 x| Z_2 of
// isometries of the circle: shift a goes to the rotation e^{ia}, the
// reflection flag is kept. The image is dense, which is what makes the
// induced group topology non-discrete; min_gap() measures how fast the
// images {e^{ik} : |k| <= n} crowd together.

namespace idinf::circle {

  // A point z = re + i im of the unit circle and a reflection flag,
  // acting as w -> conj^flip(w) z on the circle, composed left to right.
  struct CircleElem {
    double re   = 1.0;
    double im   = 0.0;
    bool   flip = false;
  };

  inline constexpr double unit_norm_tol = 1e-12;

  // (cos a, sin a, flip) with a reduced modulo 2 pi first.
  [[nodiscard]] CircleElem theta(Isometry const& g);

  // (z1, f1)(z2, f2) = (conj^{f2}(z1) z2, f1 xor f2), renormalized.
  [[nodiscard]] CircleElem circle_mul(CircleElem const& x, CircleElem const& y);

  // |z1 - z2| when the flags agree, +infinity otherwise.
  [[nodiscard]] double distance(CircleElem const& x, CircleElem const& y);

  // | |z|^2 - 1 |
  [[nodiscard]] double norm_defect(CircleElem const& x);

  // Angle of e^{ik} in [0, 2 pi).
  [[nodiscard]] double angle_of(long long k);

  // Smallest arc distance between two of the points {e^{ik} : |k| <= n}.
  // Throws std::invalid_argument unless n >= 1.
  [[nodiscard]] double min_gap(long long n);

  // min_gap(1), ..., min_gap(max_n), computed incrementally: inserting
  // e^{in} and e^{-in} can only split existing arcs.
  [[nodiscard]] std::vector<double> min_gap_profile(long long max_n);

  // 2 pi / (2n + 1): 2n + 1 distinct points on a circle of length 2 pi
  // leave some arc at most this long.
  [[nodiscard]] double pigeonhole_bound(long long n);

}  // namespace idinf::circle

#endif  // IDINF_CIRCLE_HPP_
