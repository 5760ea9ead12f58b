#ifndef IDINF_PARTIAL_ISOMETRY_HPP_
#define IDINF_PARTIAL_ISOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "idinf/finset.hpp"
#include "idinf/isometry.hpp"

namespace idinf {

  // An element of the inverse semigroup of partial cofinite isometries of the
  // integers: the global isometry gamma restricted to Z \ excl.
  //
  // Every cofinite partial isometry extends to exactly one global isometry,
  // so the pair (gamma, excl) is a canonical form: two values describe the
  // same partial map if and only if they compare equal. The domain is always
  // cofinite, hence nonempty, and there is no zero element.
  class PartialIsometry {
   public:
    // The identity of the monoid.
    PartialIsometry() = default;
    PartialIsometry(Isometry gamma, FinSet excl)
        : _gamma(gamma), _excl(std::move(excl)) {}

    // The unit extending g to all of Z.
    static PartialIsometry unit(Isometry g) {
      return PartialIsometry(g, FinSet());
    }
    // The partial identity on Z \ excl.
    static PartialIsometry idempotent(FinSet excl) {
      return PartialIsometry(Isometry::identity(), std::move(excl));
    }

    [[nodiscard]] Isometry const& gamma() const noexcept {
      return _gamma;
    }
    // Points outside the domain.
    [[nodiscard]] FinSet const& excl() const noexcept {
      return _excl;
    }
    // Points outside the range, i.e. (excl)gamma.
    [[nodiscard]] FinSet range_excl() const;

    [[nodiscard]] bool is_idempotent() const noexcept {
      return _gamma.is_identity();
    }
    [[nodiscard]] bool is_unit() const noexcept {
      return _excl.empty();
    }

    [[nodiscard]] bool in_domain(Int x) const noexcept {
      return !_excl.contains(x);
    }
    // (x)p, or nullopt outside the domain.
    [[nodiscard]] std::optional<Int> at(Int x) const;

    [[nodiscard]] PartialIsometry inverse() const;

    friend bool operator==(PartialIsometry const&, PartialIsometry const&)
        = default;
    // The total order used for deterministic output: lexicographic on
    // (sign, shift, excl).
    friend std::strong_ordering operator<=>(PartialIsometry const& p,
                                            PartialIsometry const& q) noexcept;

   private:
    Isometry _gamma;
    FinSet   _excl;
  };

  // Composition of partial maps, p first: (gamma delta, X u (Y)gamma^-1).
  PartialIsometry operator*(PartialIsometry const& p, PartialIsometry const& q);

  // Natural partial order: p <= q iff p is a restriction of q.
  [[nodiscard]] bool leq(PartialIsometry const& p, PartialIsometry const& q);

  // (p p^-1, p^-1 p): the partial identities on the domain and on the range.
  [[nodiscard]] std::pair<PartialIsometry, PartialIsometry>
  idempotents(PartialIsometry const& p);

  inline PartialIsometry pi_mul(PartialIsometry const& p,
                                PartialIsometry const& q) {
    return p * q;
  }
  inline PartialIsometry pi_inv(PartialIsometry const& p) {
    return p.inverse();
  }
  inline bool pi_leq(PartialIsometry const& p, PartialIsometry const& q) {
    return leq(p, q);
  }

}  // namespace idinf

template <>
struct std::hash<idinf::PartialIsometry> {
  std::size_t operator()(idinf::PartialIsometry const& p) const noexcept {
    std::size_t h = std::hash<idinf::Isometry>{}(p.gamma());
    for (idinf::Int x : p.excl()) {
      h ^= std::hash<idinf::Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};

#endif  // IDINF_PARTIAL_ISOMETRY_HPP_
