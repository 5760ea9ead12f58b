#ifndef IDINF_SOLVERS_HPP_
#define IDINF_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "idinf/partial_isometry.hpp"

namespace idinf {

  // Raised when a materialized enumeration would exceed its cutoff.
  class TooManySolutions : public std::length_error {
   public:
    explicit TooManySolutions(std::size_t count)
        : std::length_error("enumeration would produce too many elements"),
          _count(count) {}
    [[nodiscard]] std::size_t count() const noexcept {
      return _count;
    }

   private:
    std::size_t _count;
  };

  inline constexpr std::size_t default_solution_cutoff = std::size_t{1} << 20;

  // Finite solution set of a one-sided equation, sorted by the total order
  // on PartialIsometry. unit_member is the solution with empty excluded set,
  // if there is one.
  struct SolutionSet {
    std::vector<PartialIsometry>   solutions;
    std::optional<PartialIsometry> unit_member;

    [[nodiscard]] bool empty() const noexcept {
      return solutions.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return solutions.size();
    }
  };

  // All q with p <= q, i.e. (gamma_p, X') for every X' contained in X_p.
  // There are exactly 2^|X_p| of them.
  [[nodiscard]] std::vector<PartialIsometry>
  upset(PartialIsometry const& p,
        std::size_t            cutoff = default_solution_cutoff);

  // Number of solutions without enumerating them, or nullopt when there are
  // at least 2^63.
  [[nodiscard]] std::optional<std::uint64_t>
  count_right_solutions(PartialIsometry const& a, PartialIsometry const& b);
  [[nodiscard]] std::optional<std::uint64_t>
  count_left_solutions(PartialIsometry const& a, PartialIsometry const& b);

  // R(a|b) = {x : a x = b}.
  //
  // Nonempty iff X_a is contained in X_b; the solutions are then
  // (gamma_a^-1 gamma_b, H) with (X_b \ X_a)gamma_a <= H <= (X_b)gamma_a.
  [[nodiscard]] SolutionSet
  solve_right(PartialIsometry const& a,
              PartialIsometry const& b,
              std::size_t            cutoff = default_solution_cutoff);

  // L(a|b) = {x : x a = b}.
  //
  // With r = gamma_b gamma_a^-1 and Y = (X_a)r^-1: nonempty iff Y is
  // contained in X_b; the solutions are (r, H) with X_b \ Y <= H <= X_b.
  [[nodiscard]] SolutionSet
  solve_left(PartialIsometry const& a,
             PartialIsometry const& b,
             std::size_t            cutoff = default_solution_cutoff);

  // Streaming forms for solution sets too large to hold. The visitor sees
  // solutions in no particular order and may return false to stop early.
  using SolutionVisitor = std::function<bool(PartialIsometry const&)>;
  void for_each_right_solution(PartialIsometry const& a,
                               PartialIsometry const& b,
                               SolutionVisitor const& visit);
  void for_each_left_solution(PartialIsometry const& a,
                              PartialIsometry const& b,
                              SolutionVisitor const& visit);

  struct GreenRelations {
    bool L = false;
    bool R = false;
    bool H = false;
    bool D = false;

    friend bool operator==(GreenRelations const&, GreenRelations const&)
        = default;
  };

  // R: equal domains. L: equal ranges. H = L and R. D: the excluded sets are
  // congruent under some isometry of Z.
  [[nodiscard]] GreenRelations green(PartialIsometry const& p,
                                     PartialIsometry const& q);

  // Whether some isometry maps s onto t, decided by comparing the gap
  // sequence of s with that of t and with its reversal.
  [[nodiscard]] bool congruent(FinSet const& s, FinSet const& t);

}  // namespace idinf

#endif  // IDINF_SOLVERS_HPP_
