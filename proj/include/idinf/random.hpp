#ifndef IDINF_RANDOM_HPP_
#define IDINF_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "idinf/finset.hpp"
#include "idinf/isometry.hpp"
#include "idinf/partial_isometry.hpp"

namespace idinf {

  // splitmix64 finalizer; gives each trial an independent, schedule-free seed.
  [[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t seed,
                                                 std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  using Rng = std::mt19937_64;

  // Sign uniform, shift uniform in [-coord, coord].
  [[nodiscard]] Isometry random_isometry(Rng& rng, Int coord);

  // Up to max_size points drawn uniformly from [-coord, coord].
  [[nodiscard]] FinSet random_finset(Rng& rng, Int coord, std::size_t max_size);

  [[nodiscard]] PartialIsometry random_element(Rng&        rng,
                                               Int         coord,
                                               std::size_t max_excl);

}  // namespace idinf

#endif  // IDINF_RANDOM_HPP_
