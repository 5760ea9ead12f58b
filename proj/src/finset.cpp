#include "idinf/finset.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace idinf {

  FinSet::FinSet(std::initializer_list<Int> elems)
      : FinSet(std::vector<Int>(elems)) {}

  FinSet::FinSet(std::vector<Int> elems) : _elems(std::move(elems)) {
    std::sort(_elems.begin(), _elems.end());
    _elems.erase(std::unique(_elems.begin(), _elems.end()), _elems.end());
  }

  bool FinSet::contains(Int x) const noexcept {
    return std::binary_search(_elems.begin(), _elems.end(), x);
  }

  bool FinSet::is_subset_of(FinSet const& other) const noexcept {
    return std::includes(
        other._elems.begin(), other._elems.end(), _elems.begin(), _elems.end());
  }

  Int FinSet::max_abs() const noexcept {
    if (_elems.empty()) {
      return 0;
    }
    // Saturates at the largest Int for the most negative value.
    auto mag = [](Int x) {
      return x == std::numeric_limits<Int>::min() ? std::numeric_limits<Int>::max()
                                                  : (x < 0 ? -x : x);
    };
    return std::max(mag(_elems.front()), mag(_elems.back()));
  }

  std::strong_ordering operator<=>(FinSet const& s, FinSet const& t) noexcept {
    return std::lexicographical_compare_three_way(
        s._elems.begin(), s._elems.end(), t._elems.begin(), t._elems.end());
  }

  FinSet finset_union(FinSet const& s, FinSet const& t) {
    std::vector<Int> out;
    out.reserve(s.size() + t.size());
    std::set_union(s._elems.begin(),
                   s._elems.end(),
                   t._elems.begin(),
                   t._elems.end(),
                   std::back_inserter(out));
    return FinSet(FinSet::sorted_tag{}, std::move(out));
  }

  FinSet finset_difference(FinSet const& s, FinSet const& t) {
    std::vector<Int> out;
    std::set_difference(s._elems.begin(),
                        s._elems.end(),
                        t._elems.begin(),
                        t._elems.end(),
                        std::back_inserter(out));
    return FinSet(FinSet::sorted_tag{}, std::move(out));
  }

  FinSet finset_image(FinSet const& s, Isometry const& g) {
    std::vector<Int> out;
    out.reserve(s.size());
    for (Int x : s._elems) {
      out.push_back(g.apply(x));
    }
    if (g.is_reflection()) {
      std::reverse(out.begin(), out.end());
    }
    return FinSet(FinSet::sorted_tag{}, std::move(out));
  }

  std::vector<FinSet> subsets(FinSet const& s) {
    if (s.size() >= 63) {
      throw std::length_error("subset enumeration of a set with >= 63 "
                              "elements");
    }
    auto const       n = s.size();
    std::vector<FinSet> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Int> pick;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          pick.push_back(s.elems()[i]);
        }
      }
      out.emplace_back(std::move(pick));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace idinf
