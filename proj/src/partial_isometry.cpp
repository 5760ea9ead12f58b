#include "idinf/partial_isometry.hpp"

namespace idinf {

  FinSet PartialIsometry::range_excl() const {
    return finset_image(_excl, _gamma);
  }

  std::optional<Int> PartialIsometry::at(Int x) const {
    if (!in_domain(x)) {
      return std::nullopt;
    }
    return _gamma.apply(x);
  }

  PartialIsometry PartialIsometry::inverse() const {
    return PartialIsometry(_gamma.inverse(), range_excl());
  }

  std::strong_ordering operator<=>(PartialIsometry const& p,
                                   PartialIsometry const& q) noexcept {
    if (auto c = p._gamma <=> q._gamma; c != 0) {
      return c;
    }
    return p._excl <=> q._excl;
  }

  PartialIsometry operator*(PartialIsometry const& p,
                            PartialIsometry const& q) {
    // x is lost either by p or, after moving, by q; the points q loses pull
    // back through gamma^-1.
    FinSet pulled = finset_image(q.excl(), p.gamma().inverse());
    return PartialIsometry(p.gamma() * q.gamma(),
                           finset_union(p.excl(), pulled));
  }

  bool leq(PartialIsometry const& p, PartialIsometry const& q) {
    return p.gamma() == q.gamma() && q.excl().is_subset_of(p.excl());
  }

  std::pair<PartialIsometry, PartialIsometry>
  idempotents(PartialIsometry const& p) {
    return {PartialIsometry::idempotent(p.excl()),
            PartialIsometry::idempotent(p.range_excl())};
  }

}  // namespace idinf
