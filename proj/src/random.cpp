#include "idinf/random.hpp"

#include <vector>

namespace idinf {

  Isometry random_isometry(Rng& rng, Int coord) {
    std::uniform_int_distribution<Int> shift(-coord, coord);
    std::bernoulli_distribution        flip(0.5);
    int                                sign = flip(rng) ? -1 : 1;
    return Isometry(sign, shift(rng));
  }

  FinSet random_finset(Rng& rng, Int coord, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size(0, max_size);
    std::uniform_int_distribution<Int>         point(-coord, coord);
    std::vector<Int>                           elems(size(rng));
    for (Int& x : elems) {
      x = point(rng);
    }
    return FinSet(std::move(elems));
  }

  PartialIsometry random_element(Rng& rng, Int coord, std::size_t max_excl) {
    Isometry g = random_isometry(rng, coord);
    return PartialIsometry(g, random_finset(rng, coord, max_excl));
  }

}  // namespace idinf
