#include "idinf/solvers.hpp"

#include <algorithm>
#include <limits>

namespace idinf {

  namespace {

    struct Family {
      Isometry gamma;
      FinSet   forced;    // contained in every solution's excluded set
      FinSet   optional;  // each element may or may not be added
    };

    std::optional<Family> right_family(PartialIsometry const& a,
                                       PartialIsometry const& b) {
      if (!a.excl().is_subset_of(b.excl())) {
        return std::nullopt;
      }
      Isometry const& g = a.gamma();
      return Family{g.inverse() * b.gamma(),
                    finset_image(finset_difference(b.excl(), a.excl()), g),
                    finset_image(a.excl(), g)};
    }

    std::optional<Family> left_family(PartialIsometry const& a,
                                      PartialIsometry const& b) {
      Isometry r    = b.gamma() * a.gamma().inverse();
      FinSet   lost = finset_image(a.excl(), r.inverse());
      if (!lost.is_subset_of(b.excl())) {
        return std::nullopt;
      }
      return Family{r, finset_difference(b.excl(), lost), lost};
    }

    std::optional<std::uint64_t> family_size(std::optional<Family> const& f) {
      if (!f) {
        return 0;
      }
      if (f->optional.size() >= 63) {
        return std::nullopt;
      }
      return std::uint64_t{1} << f->optional.size();
    }

    void visit_family(Family const& f, SolutionVisitor const& visit) {
      auto const n = f.optional.size();
      if (n >= 63) {
        throw TooManySolutions(std::numeric_limits<std::size_t>::max());
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Int> h(f.forced.begin(), f.forced.end());
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) {
            h.push_back(f.optional.elems()[i]);
          }
        }
        if (!visit(PartialIsometry(f.gamma, FinSet(std::move(h))))) {
          return;
        }
      }
    }

    SolutionSet materialize(std::optional<Family> const& f,
                            std::size_t                  cutoff) {
      SolutionSet out;
      if (!f) {
        return out;
      }
      auto size = family_size(f);
      if (!size || *size > cutoff) {
        throw TooManySolutions(size ? *size
                                    : std::numeric_limits<std::size_t>::max());
      }
      out.solutions.reserve(*size);
      visit_family(*f, [&out](PartialIsometry const& x) {
        out.solutions.push_back(x);
        return true;
      });
      std::sort(out.solutions.begin(), out.solutions.end());
      if (f->forced.empty()) {
        out.unit_member = PartialIsometry::unit(f->gamma);
      }
      return out;
    }

    std::vector<Int> gaps(FinSet const& s) {
      std::vector<Int> out;
      for (std::size_t i = 1; i < s.size(); ++i) {
        out.push_back(checked_sub(s.elems()[i], s.elems()[i - 1]));
      }
      return out;
    }

  }  // namespace

  std::vector<PartialIsometry> upset(PartialIsometry const& p,
                                     std::size_t            cutoff) {
    if (p.excl().size() >= 63
        || (std::uint64_t{1} << p.excl().size()) > cutoff) {
      throw TooManySolutions(p.excl().size() >= 63
                                 ? std::numeric_limits<std::size_t>::max()
                                 : std::size_t{1} << p.excl().size());
    }
    std::vector<PartialIsometry> out;
    for (FinSet& x : subsets(p.excl())) {
      out.emplace_back(p.gamma(), std::move(x));
    }
    // subsets() is ordered lexicographically and the isometry is shared.
    return out;
  }

  std::optional<std::uint64_t> count_right_solutions(PartialIsometry const& a,
                                                     PartialIsometry const& b) {
    return family_size(right_family(a, b));
  }

  std::optional<std::uint64_t> count_left_solutions(PartialIsometry const& a,
                                                    PartialIsometry const& b) {
    return family_size(left_family(a, b));
  }

  SolutionSet solve_right(PartialIsometry const& a,
                          PartialIsometry const& b,
                          std::size_t            cutoff) {
    return materialize(right_family(a, b), cutoff);
  }

  SolutionSet solve_left(PartialIsometry const& a,
                         PartialIsometry const& b,
                         std::size_t            cutoff) {
    return materialize(left_family(a, b), cutoff);
  }

  void for_each_right_solution(PartialIsometry const& a,
                               PartialIsometry const& b,
                               SolutionVisitor const& visit) {
    if (auto f = right_family(a, b)) {
      visit_family(*f, visit);
    }
  }

  void for_each_left_solution(PartialIsometry const& a,
                              PartialIsometry const& b,
                              SolutionVisitor const& visit) {
    if (auto f = left_family(a, b)) {
      visit_family(*f, visit);
    }
  }

  bool congruent(FinSet const& s, FinSet const& t) {
    if (s.size() != t.size()) {
      return false;
    }
    auto gs = gaps(s);
    auto gt = gaps(t);
    return gs == gt || std::equal(gs.begin(), gs.end(), gt.rbegin(), gt.rend());
  }

  GreenRelations green(PartialIsometry const& p, PartialIsometry const& q) {
    GreenRelations out;
    out.R = p.excl() == q.excl();
    out.L = p.range_excl() == q.range_excl();
    out.H = out.L && out.R;
    out.D = congruent(p.excl(), q.excl());
    return out;
  }

}  // namespace idinf
