#include "idinf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace idinf::oracle {

  namespace {

    Int magnitude(Int x) {
      return x < 0 ? checked_neg(x) : x;
    }

    Int enlarge(Int n, PartialIsometry const& p) {
      return checked_add(n, magnitude(p.gamma().shift()));
    }

    // The graph of p on [-n, n] turned around: image -> preimage.
    std::map<Int, Int> inverted_graph(PartialIsometry const& p, Int n) {
      std::map<Int, Int> out;
      for (Int x = -n; x <= n; ++x) {
        if (auto y = eval_point(p, x)) {
          out.emplace(*y, x);
        }
      }
      return out;
    }

    // The isometry taking x0 -> y0 and x1 -> y1, if there is one.
    std::optional<Isometry> through(Int x0, Int y0, Int x1, Int y1) {
      Int dx = checked_sub(x1, x0);
      Int dy = checked_sub(y1, y0);
      if (dx == 0 || (dy != dx && dy != checked_neg(dx))) {
        return std::nullopt;
      }
      int sign = dy == dx ? 1 : -1;
      return Isometry(sign, checked_sub(y0, sign == 1 ? x0 : checked_neg(x0)));
    }

    // Two points where both p and q are defined.
    std::pair<Int, Int> common_points(PartialIsometry const& p,
                                      PartialIsometry const& q,
                                      Int                    n) {
      std::vector<Int> found;
      for (Int x = n; x >= -n && found.size() < 2; --x) {
        if (eval_point(p, x) && eval_point(q, x)) {
          found.push_back(x);
        }
      }
      if (found.size() < 2) {
        throw std::logic_error("window too small to pin down an isometry");
      }
      return {found[0], found[1]};
    }

  }  // namespace

  std::optional<Int> eval_point(PartialIsometry const& p, Int x) {
    if (p.excl().contains(x)) {
      return std::nullopt;
    }
    return p.gamma().apply(x);
  }

  WindowMap window_of(PartialIsometry const& p, Int n) {
    if (n < 1) {
      throw std::invalid_argument("window size must be at least 1");
    }
    WindowMap w;
    w.window_n = n;
    for (Int x = -n; x <= n; ++x) {
      if (auto y = eval_point(p, x)) {
        w.pairs.emplace_hint(w.pairs.end(), x, *y);
      }
    }
    return w;
  }

  bool is_distance_preserving(WindowMap const& w) {
    for (auto i = w.pairs.begin(); i != w.pairs.end(); ++i) {
      for (auto j = std::next(i); j != w.pairs.end(); ++j) {
        if (magnitude(checked_sub(i->first, j->first))
            != magnitude(checked_sub(i->second, j->second))) {
          return false;
        }
      }
    }
    return true;
  }

  Int auto_window(std::vector<PartialIsometry> const& elems) {
    Int coords = 0;
    Int shifts = 0;
    for (auto const& p : elems) {
      coords = std::max(coords, p.excl().max_abs());
      shifts = std::max(shifts, magnitude(p.gamma().shift()));
    }
    // Images and preimages of excluded points under any isometry in play
    // stay within coords + shifts.
    return checked_add(checked_add(coords, shifts), 2);
  }

  Int auto_window(std::initializer_list<PartialIsometry> elems) {
    return auto_window(std::vector<PartialIsometry>(elems));
  }

  WindowMap compose_pointwise(PartialIsometry const& p,
                              PartialIsometry const& q,
                              Int                    n) {
    WindowMap w;
    w.window_n = n;
    for (Int x = -n; x <= n; ++x) {
      if (auto y = eval_point(p, x)) {
        if (auto z = eval_point(q, *y)) {
          w.pairs.emplace_hint(w.pairs.end(), x, *z);
        }
      }
    }
    return w;
  }

  bool mul_check(PartialIsometry const& p, PartialIsometry const& q, Int n) {
    return window_of(p * q, n) == compose_pointwise(p, q, n);
  }

  bool inv_check(PartialIsometry const& p, Int n) {
    WindowMap expected;
    expected.window_n = n;
    for (auto [y, x] : inverted_graph(p, enlarge(n, p))) {
      if (-n <= y && y <= n) {
        expected.pairs.emplace(y, x);
      }
    }
    return window_of(p.inverse(), n) == expected;
  }

  bool restricts(PartialIsometry const& p, PartialIsometry const& q, Int n) {
    WindowMap wq = window_of(q, n);
    for (auto [x, y] : window_of(p, n).pairs) {
      auto it = wq.pairs.find(x);
      if (it == wq.pairs.end() || it->second != y) {
        return false;
      }
    }
    return true;
  }

  bool leq_check(PartialIsometry const& p, PartialIsometry const& q, Int n) {
    return leq(p, q) == restricts(p, q, n);
  }

  bool canonical_check(PartialIsometry const& p,
                       PartialIsometry const& q,
                       Int                    n) {
    return (p == q) == (window_of(p, n) == window_of(q, n));
  }

  FinSet solve_bound(PartialIsometry const& a,
                     PartialIsometry const& b,
                     Side                   side) {
    if (side == Side::left) {
      return b.excl();
    }
    std::vector<Int> out;
    for (Int x : b.excl()) {
      out.push_back(a.gamma().apply(x));
    }
    return FinSet(std::move(out));
  }

  std::vector<PartialIsometry> solve(PartialIsometry const& a,
                                     PartialIsometry const& b,
                                     Side                   side,
                                     FinSet const&          bound) {
    if (bound.size() >= 63) {
      throw TooManySolutions(std::numeric_limits<std::size_t>::max());
    }
    Int n = auto_window({a, b, PartialIsometry(Isometry(), bound)});
    // Pin down the unit part from two sample points.
    std::optional<Isometry> rho;
    if (side == Side::right) {
      // (x)a rho = (x)b
      auto [x0, x1] = common_points(a, b, n);
      rho = through(*eval_point(a, x0),
                    *eval_point(b, x0),
                    *eval_point(a, x1),
                    *eval_point(b, x1));
    } else {
      // (x)rho a = (x)b, so (x)rho is the a-preimage of (x)b
      Int  wide = checked_add(enlarge(n, a), enlarge(n, b));
      auto pre  = inverted_graph(a, wide);
      std::vector<std::pair<Int, Int>> pts;
      for (Int x = n; x >= -n && pts.size() < 2; --x) {
        if (auto y = eval_point(b, x)) {
          if (auto it = pre.find(*y); it != pre.end()) {
            pts.emplace_back(x, it->second);
          }
        }
      }
      if (pts.size() == 2) {
        rho = through(pts[0].first, pts[0].second, pts[1].first, pts[1].second);
      }
    }
    std::vector<PartialIsometry> out;
    if (!rho) {
      return out;
    }
    n = std::max(n, auto_window({a, b, PartialIsometry(*rho, bound)}));
    WindowMap target = window_of(b, n);
    for (FinSet const& h : subsets(bound)) {
      PartialIsometry x(*rho, h);
      WindowMap got = side == Side::right ? compose_pointwise(a, x, n)
                                          : compose_pointwise(x, a, n);
      if (got == target) {
        out.push_back(std::move(x));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<PartialIsometry> bounded_elements(Int coord, Int max_shift) {
    std::vector<Int> box;
    for (Int x = -coord; x <= coord; ++x) {
      box.push_back(x);
    }
    std::vector<FinSet> sets = subsets(FinSet(box));
    std::vector<PartialIsometry> out;
    out.reserve(2 * static_cast<std::size_t>(2 * max_shift + 1) * sets.size());
    for (int sign : {-1, 1}) {
      for (Int a = -max_shift; a <= max_shift; ++a) {
        for (FinSet const& s : sets) {
          out.emplace_back(Isometry(sign, a), s);
        }
      }
    }
    return out;
  }

  std::vector<Int> missing_domain(PartialIsometry const& p, Int m) {
    std::vector<Int> out;
    for (Int x = -m; x <= m; ++x) {
      if (!eval_point(p, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Int> missing_range(PartialIsometry const& p, Int m) {
    auto             hit = inverted_graph(p, enlarge(m, p));
    std::vector<Int> out;
    for (Int y = -m; y <= m; ++y) {
      if (!hit.contains(y)) {
        out.push_back(y);
      }
    }
    return out;
  }

  GreenRelations green(PartialIsometry const& p, PartialIsometry const& q) {
    Int            m = auto_window({p, q});
    GreenRelations out;
    out.R = missing_domain(p, m) == missing_domain(q, m);
    out.L = missing_range(p, m) == missing_range(q, m);
    out.H = out.L && out.R;

    // Any x R q has q's domain; look for one whose range is p's range.
    FinSet dom_q(missing_domain(q, m));
    Int    reach = checked_mul(2, m);
    for (int sign : {-1, 1}) {
      for (Int a = -reach; a <= reach && !out.D; ++a) {
        PartialIsometry x(Isometry(sign, a), dom_q);
        Int             w = auto_window({p, x});
        if (missing_range(p, w) == missing_range(x, w)) {
          out.D = true;
        }
      }
    }
    return out;
  }

}  // namespace idinf::oracle
