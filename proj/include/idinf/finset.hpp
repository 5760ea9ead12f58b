#ifndef IDINF_FINSET_HPP_
#define IDINF_FINSET_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "idinf/checked.hpp"
#include "idinf/isometry.hpp"

namespace idinf {

  // A finite subset of the integers, stored strictly increasing. The empty
  // set is the unit of the free semilattice (finite sets, union).
  class FinSet {
   public:
    FinSet() = default;
    FinSet(std::initializer_list<Int> elems);
    // Sorts and removes duplicates.
    explicit FinSet(std::vector<Int> elems);

    [[nodiscard]] std::span<Int const> elems() const noexcept {
      return _elems;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elems.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _elems.empty();
    }
    [[nodiscard]] auto begin() const noexcept {
      return _elems.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _elems.cend();
    }
    [[nodiscard]] Int front() const {
      return _elems.front();
    }
    [[nodiscard]] Int back() const {
      return _elems.back();
    }

    [[nodiscard]] bool contains(Int x) const noexcept;
    [[nodiscard]] bool is_subset_of(FinSet const& other) const noexcept;

    // Largest absolute value of an element, 0 for the empty set.
    [[nodiscard]] Int max_abs() const noexcept;

    friend bool operator==(FinSet const&, FinSet const&) = default;
    // Lexicographic on the sorted element sequence.
    friend std::strong_ordering operator<=>(FinSet const& s,
                                            FinSet const& t) noexcept;

   private:
    struct sorted_tag {};
    FinSet(sorted_tag, std::vector<Int> elems) : _elems(std::move(elems)) {}

    friend FinSet finset_union(FinSet const&, FinSet const&);
    friend FinSet finset_difference(FinSet const&, FinSet const&);
    friend FinSet finset_image(FinSet const&, Isometry const&);

    std::vector<Int> _elems;
  };

  FinSet finset_union(FinSet const& s, FinSet const& t);
  FinSet finset_difference(FinSet const& s, FinSet const& t);

  // {(x)g : x in s}. A reflection reverses the order of the elements.
  FinSet finset_image(FinSet const& s, Isometry const& g);

  // The lexicographically ordered list of all subsets of s. Intended for the
  // small sets that occur in enumerations; size must be below 63.
  std::vector<FinSet> subsets(FinSet const& s);

}  // namespace idinf

#endif  // IDINF_FINSET_HPP_
