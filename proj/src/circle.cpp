#include "idinf/circle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

namespace idinf::circle {

  namespace {

    constexpr double two_pi = 2 * std::numbers::pi;

    CircleElem normalized(double re, double im, bool flip) {
      double r = std::hypot(re, im);
      return {re / r, im / r, flip};
    }

    double arc(double a, double b) {
      double d = std::abs(a - b);
      return std::min(d, two_pi - d);
    }

  }  // namespace

  double angle_of(long long k) {
    double r = std::remainder(static_cast<double>(k), two_pi);
    return r < 0 ? r + two_pi : r;
  }

  CircleElem theta(Isometry const& g) {
    double r = std::remainder(static_cast<double>(g.shift()), two_pi);
    return normalized(std::cos(r), std::sin(r), g.is_reflection());
  }

  CircleElem circle_mul(CircleElem const& x, CircleElem const& y) {
    double xi = y.flip ? -x.im : x.im;
    return normalized(
        x.re * y.re - xi * y.im, x.re * y.im + xi * y.re, x.flip != y.flip);
  }

  double distance(CircleElem const& x, CircleElem const& y) {
    if (x.flip != y.flip) {
      return std::numeric_limits<double>::infinity();
    }
    return std::hypot(x.re - y.re, x.im - y.im);
  }

  double norm_defect(CircleElem const& x) {
    return std::abs(x.re * x.re + x.im * x.im - 1.0);
  }

  double min_gap(long long n) {
    if (n < 1) {
      throw std::invalid_argument("min_gap needs n >= 1");
    }
    std::vector<double> angles;
    angles.reserve(2 * n + 1);
    for (long long k = -n; k <= n; ++k) {
      angles.push_back(angle_of(k));
    }
    std::sort(angles.begin(), angles.end());
    double best = two_pi - angles.back() + angles.front();
    for (std::size_t i = 1; i < angles.size(); ++i) {
      best = std::min(best, angles[i] - angles[i - 1]);
    }
    return best;
  }

  std::vector<double> min_gap_profile(long long max_n) {
    std::vector<double> out;
    if (max_n < 1) {
      return out;
    }
    out.reserve(max_n);
    std::set<double> pts{angle_of(0)};
    double           best = std::numeric_limits<double>::infinity();
    auto             insert = [&](double a) {
      auto [it, fresh] = pts.insert(a);
      if (!fresh) {
        best = 0.0;
        return;
      }
      auto next = std::next(it) == pts.end() ? pts.begin() : std::next(it);
      auto prev = it == pts.begin() ? std::prev(pts.end()) : std::prev(it);
      best      = std::min({best, arc(a, *next), arc(a, *prev)});
    };
    for (long long n = 1; n <= max_n; ++n) {
      insert(angle_of(n));
      insert(angle_of(-n));
      out.push_back(best);
    }
    return out;
  }

  double pigeonhole_bound(long long n) {
    return two_pi / static_cast<double>(2 * n + 1);
  }

}  // namespace idinf::circle
