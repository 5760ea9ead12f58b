#ifndef IDINF_KERNELS_HPP_
#define IDINF_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idinf/partial_isometry.hpp"

// Data-parallel drivers for the verification workloads. Each kernel has an
// OpenMP path and a plain serial reference path; both produce identical
// results because every work item is independent and results are merged by
// item index.

namespace idinf::kernels {

  enum class Exec { serial, parallel };

  struct SweepResult {
    std::size_t checked = 0;
    // Indices of the failing items, ascending.
    std::vector<std::size_t> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
    friend bool operator==(SweepResult const&, SweepResult const&) = default;
  };

  namespace detail {
    SweepResult collect(std::vector<unsigned char> const& failed);
  }

  // Runs check(i) for i in [0, count). An item fails when check returns
  // false or throws.
  template <typename Check>
  SweepResult sweep(std::size_t count, Check const& check, Exec exec) {
    std::vector<unsigned char> failed(count, 0);
    auto                       run = [&](std::size_t i) {
      try {
        failed[i] = check(i) ? 0 : 1;
      } catch (...) {
        failed[i] = 1;
      }
    };
    if (exec == Exec::parallel) {
      auto const n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < n; ++i) {
        run(static_cast<std::size_t>(i));
      }
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        run(i);
      }
    }
    return detail::collect(failed);
  }

  // Counts for one side of the one-sided equation scan.
  struct EquationCounts {
    std::uint64_t nonempty = 0;
    // Instances with solutions but none of them a unit.
    std::uint64_t nonempty_without_unit = 0;
    // Largest number of unit solutions seen in one instance.
    std::uint64_t max_units = 0;
    std::optional<std::pair<PartialIsometry, PartialIsometry>> first_without_unit;

    friend bool operator==(EquationCounts const&, EquationCounts const&)
        = default;
  };

  struct EquationScan {
    Int            coord_bound = 0;
    std::uint64_t  elements    = 0;
    std::uint64_t  instances   = 0;
    EquationCounts right;
    EquationCounts left;

    friend bool operator==(EquationScan const&, EquationScan const&) = default;
  };

  // Solves a x = b and x a = b for every pair of elements with excluded set
  // in [-bound, bound] and |shift| <= bound, counting unit solutions.
  [[nodiscard]] EquationScan equation_scan(Int bound, Exec exec);

}  // namespace idinf::kernels

#endif  // IDINF_KERNELS_HPP_
