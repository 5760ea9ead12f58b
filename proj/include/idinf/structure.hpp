#ifndef IDINF_STRUCTURE_HPP_
#define IDINF_STRUCTURE_HPP_

#include <compare>

#include "idinf/finset.hpp"
#include "idinf/isometry.hpp"
#include "idinf/partial_isometry.hpp"

// Congruence and decomposition structure of the semigroup:
//
//   * the minimum group congruence sigma and its quotient onto Iso(Z);
//   * the F-inverse maximum of each sigma-class;
//   * the semidirect product Iso(Z) x_h P_fin(Z), elements stored with the
//     range-excluded set;
//   * the F-inverse reconstruction (idempotent, class maximum) with the
//     twisted product, elements stored with the domain-excluded set.
//
// Both reconstructions are kept on purpose: each is checked against the
// other through the conversion E = (X)gamma.

namespace idinf {

  ////////////////////////////////////////////////////////////////////////
  // sigma
  ////////////////////////////////////////////////////////////////////////

  // The unique unit above p.
  [[nodiscard]] inline Isometry gmap(PartialIsometry const& p) {
    return p.gamma();
  }

  // p sigma q iff e p = e q for some idempotent e; here iff gmap agrees.
  [[nodiscard]] inline bool sigma_eq(PartialIsometry const& p,
                                     PartialIsometry const& q) {
    return p.gamma() == q.gamma();
  }

  // An idempotent e with e p = e q when p sigma q: the partial identity
  // avoiding both excluded sets.
  [[nodiscard]] PartialIsometry sigma_witness(PartialIsometry const& p,
                                              PartialIsometry const& q);

  // The maximum of the sigma-class of p, which is always a unit.
  [[nodiscard]] inline PartialIsometry sigma_max(PartialIsometry const& p) {
    return PartialIsometry::unit(p.gamma());
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect product
  ////////////////////////////////////////////////////////////////////////

  // The action h_g of a unit on the semilattice of idempotents,
  // e -> g^-1 e g. On excluded sets this is E -> (E)g.
  [[nodiscard]] FinSet h_action(FinSet const& e_excl, Isometry const& g);

  struct SemidirectElem {
    Isometry gamma;
    // Excluded set of the idempotent p^-1 p.
    FinSet ran_excl;

    friend bool operator==(SemidirectElem const&, SemidirectElem const&)
        = default;
    friend auto operator<=>(SemidirectElem const&, SemidirectElem const&)
        = default;
  };

  // (g1, E1)(g2, E2) = (g1 g2, (E1)h_g2 u E2)
  SemidirectElem operator*(SemidirectElem const& s, SemidirectElem const& t);

  [[nodiscard]] SemidirectElem to_semidirect(PartialIsometry const& p);
  [[nodiscard]] PartialIsometry from_semidirect(SemidirectElem const& s);

  ////////////////////////////////////////////////////////////////////////
  // F-inverse reconstruction
  ////////////////////////////////////////////////////////////////////////

  // The transport map F_t(f) = t f t^-1 on excluded sets: F -> (F)t^-1.
  // Every class maximum t is a unit, so F_t is defined on all idempotents.
  [[nodiscard]] FinSet mc_conjugate(Isometry const& t, FinSet const& f_excl);

  // u * v = t_{uv}, the class maximum of the product of two class maxima.
  [[nodiscard]] PartialIsometry max_product(PartialIsometry const& u,
                                            PartialIsometry const& v);

  struct MCElem {
    // Excluded set of f = s s^-1.
    FinSet   idem_excl;
    Isometry t;

    friend bool operator==(MCElem const&, MCElem const&) = default;
    friend auto operator<=>(MCElem const&, MCElem const&) = default;
  };

  // (f, u)(g, v) = (f F_u(g), u * v)
  MCElem operator*(MCElem const& x, MCElem const& y);

  [[nodiscard]] inline MCElem mc_mul(MCElem const& x, MCElem const& y) {
    return x * y;
  }

  // s -> (s s^-1, t_s)
  [[nodiscard]] MCElem mc_embed(PartialIsometry const& p);
  [[nodiscard]] PartialIsometry mc_extract(MCElem const& x);

  // Domain-excluded and range-excluded data describe the same element.
  [[nodiscard]] SemidirectElem mc_to_semidirect(MCElem const& x);

  ////////////////////////////////////////////////////////////////////////
  // Iso(Z) as Z(+) x| Z_2
  ////////////////////////////////////////////////////////////////////////

  // x -> e x + a is encoded as (a, flip) with flip = 1 iff e = -1.
  struct UnitPair {
    Int  shift = 0;
    bool flip  = false;

    friend bool operator==(UnitPair const&, UnitPair const&) = default;
  };

  [[nodiscard]] UnitPair units_as_pairs(Isometry const& g);
  [[nodiscard]] Isometry pairs_as_unit(UnitPair const& p);

  // Induced law: (a1, f1)(a2, f2) = ((-1)^f2 a1 + a2, f1 xor f2).
  UnitPair operator*(UnitPair const& x, UnitPair const& y);

}  // namespace idinf

#endif  // IDINF_STRUCTURE_HPP_
