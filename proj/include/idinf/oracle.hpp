#ifndef IDINF_ORACLE_HPP_
#define IDINF_ORACLE_HPP_

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "idinf/partial_isometry.hpp"
#include "idinf/solvers.hpp"

// Brute-force referee for the closed-form algebra.
//
// Everything here evaluates elements pointwise, one integer at a time, and
// compares the resulting finite graphs. None of it calls the set algebra of
// the closed forms (products, inverses, excluded-set images); the only shared
// primitive is evaluating an isometry at a point.

namespace idinf::oracle {

  // Graph of an element on the window [-n, n]. Images may leave the window.
  struct WindowMap {
    Int                window_n = 0;
    std::map<Int, Int> pairs;

    friend bool operator==(WindowMap const&, WindowMap const&) = default;
  };

  // Pointwise evaluation, by definition of the element as a restricted map.
  [[nodiscard]] std::optional<Int> eval_point(PartialIsometry const& p, Int x);

  // Throws std::invalid_argument unless n >= 1.
  [[nodiscard]] WindowMap window_of(PartialIsometry const& p, Int n);

  // Whether |x - y| = |f(x) - f(y)| for every pair of points in the graph.
  [[nodiscard]] bool is_distance_preserving(WindowMap const& w);

  // Smallest window covering every excluded coordinate and its image under
  // the element's isometry, every shift, plus a margin of 2.
  [[nodiscard]] Int auto_window(std::initializer_list<PartialIsometry> elems);
  [[nodiscard]] Int auto_window(std::vector<PartialIsometry> const& elems);

  // The graph of "p then q" on [-n, n], composed point by point.
  [[nodiscard]] WindowMap compose_pointwise(PartialIsometry const& p,
                                            PartialIsometry const& q,
                                            Int                    n);

  // pi_mul against pointwise composition on [-n, n].
  [[nodiscard]] bool mul_check(PartialIsometry const& p,
                               PartialIsometry const& q,
                               Int                    n);
  // pi_inv: the candidate inverse, restricted to [-n, n], must be the
  // reversed graph of p.
  [[nodiscard]] bool inv_check(PartialIsometry const& p, Int n);
  // p <= q as restriction of graphs on [-n, n].
  [[nodiscard]] bool restricts(PartialIsometry const& p,
                               PartialIsometry const& q,
                               Int                    n);
  // pi_leq against restricts().
  [[nodiscard]] bool leq_check(PartialIsometry const& p,
                               PartialIsometry const& q,
                               Int                    n);
  // Field equality against graph equality on [-n, n].
  [[nodiscard]] bool canonical_check(PartialIsometry const& p,
                                     PartialIsometry const& q,
                                     Int                    n);

  enum class Side { left, right };

  // Exhaustive search for the solutions of a x = b (right) or x a = b
  // (left). The unit part of x is forced by the group equation; every
  // excluded set contained in bound is tried and kept when the pointwise
  // composition reproduces b. Result sorted by the total order.
  [[nodiscard]] std::vector<PartialIsometry>
  solve(PartialIsometry const& a,
        PartialIsometry const& b,
        Side                   side,
        FinSet const&          bound);

  // The bound guaranteed to contain every solution's excluded set:
  // (X_b)gamma_a for the right equation, X_b for the left one.
  [[nodiscard]] FinSet solve_bound(PartialIsometry const& a,
                                   PartialIsometry const& b,
                                   Side                   side);

  // Every element with sign +-1, |shift| <= max_shift and excluded set
  // contained in [-coord, coord], in the total order.
  [[nodiscard]] std::vector<PartialIsometry> bounded_elements(Int coord,
                                                              Int max_shift);

  // Points of [-m, m] outside the domain / outside the range, found by
  // scanning.
  [[nodiscard]] std::vector<Int> missing_domain(PartialIsometry const& p,
                                                Int                    m);
  [[nodiscard]] std::vector<Int> missing_range(PartialIsometry const& p,
                                               Int                    m);

  // Green's relations by pointwise domain and range comparison; D by
  // searching for an intermediate x with p L x R q.
  [[nodiscard]] GreenRelations green(PartialIsometry const& p,
                                     PartialIsometry const& q);

}  // namespace idinf::oracle

#endif  // IDINF_ORACLE_HPP_
