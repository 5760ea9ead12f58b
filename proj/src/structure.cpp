#include "idinf/structure.hpp"

namespace idinf {

  PartialIsometry sigma_witness(PartialIsometry const& p,
                                PartialIsometry const& q) {
    return PartialIsometry::idempotent(finset_union(p.excl(), q.excl()));
  }

  FinSet h_action(FinSet const& e_excl, Isometry const& g) {
    return finset_image(e_excl, g);
  }

  SemidirectElem operator*(SemidirectElem const& s, SemidirectElem const& t) {
    return {s.gamma * t.gamma,
            finset_union(h_action(s.ran_excl, t.gamma), t.ran_excl)};
  }

  SemidirectElem to_semidirect(PartialIsometry const& p) {
    return {p.gamma(), p.range_excl()};
  }

  PartialIsometry from_semidirect(SemidirectElem const& s) {
    return PartialIsometry(s.gamma, finset_image(s.ran_excl, s.gamma.inverse()));
  }

  FinSet mc_conjugate(Isometry const& t, FinSet const& f_excl) {
    return finset_image(f_excl, t.inverse());
  }

  PartialIsometry max_product(PartialIsometry const& u,
                              PartialIsometry const& v) {
    return sigma_max(u * v);
  }

  MCElem operator*(MCElem const& x, MCElem const& y) {
    return {finset_union(x.idem_excl, mc_conjugate(x.t, y.idem_excl)),
            x.t * y.t};
  }

  MCElem mc_embed(PartialIsometry const& p) {
    return {p.excl(), p.gamma()};
  }

  PartialIsometry mc_extract(MCElem const& x) {
    return PartialIsometry(x.t, x.idem_excl);
  }

  SemidirectElem mc_to_semidirect(MCElem const& x) {
    return {x.t, finset_image(x.idem_excl, x.t)};
  }

  UnitPair units_as_pairs(Isometry const& g) {
    return {g.shift(), g.is_reflection()};
  }

  Isometry pairs_as_unit(UnitPair const& p) {
    return Isometry(p.flip ? -1 : 1, p.shift);
  }

  UnitPair operator*(UnitPair const& x, UnitPair const& y) {
    Int moved = y.flip ? checked_neg(x.shift) : x.shift;
    return {checked_add(moved, y.shift), x.flip != y.flip};
  }

}  // namespace idinf
