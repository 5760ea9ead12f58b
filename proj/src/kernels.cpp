#include "idinf/kernels.hpp"

#include <algorithm>

#include "idinf/oracle.hpp"
#include "idinf/solvers.hpp"

namespace idinf::kernels {

  SweepResult detail::collect(std::vector<unsigned char> const& failed) {
    SweepResult out;
    out.checked = failed.size();
    for (std::size_t i = 0; i < failed.size(); ++i) {
      if (failed[i]) {
        out.failures.push_back(i);
      }
    }
    return out;
  }

  namespace {

    constexpr std::size_t none = static_cast<std::size_t>(-1);

    struct RowCounts {
      std::uint64_t nonempty              = 0;
      std::uint64_t nonempty_without_unit = 0;
      std::uint64_t max_units             = 0;
      std::size_t   first_without_unit    = none;  // column index
    };

    template <typename Visit>
    void tally(RowCounts& row, std::size_t column, Visit const& visit_solutions) {
      std::uint64_t count = 0;
      std::uint64_t units = 0;
      visit_solutions([&](PartialIsometry const& x) {
        ++count;
        units += x.is_unit() ? 1 : 0;
        return true;
      });
      if (count == 0) {
        return;
      }
      ++row.nonempty;
      row.max_units = std::max(row.max_units, units);
      if (units == 0) {
        ++row.nonempty_without_unit;
        row.first_without_unit = std::min(row.first_without_unit, column);
      }
    }

    void scan_row(std::vector<PartialIsometry> const& elems,
                  std::size_t                         i,
                  RowCounts&                          right,
                  RowCounts&                          left) {
      auto const& a = elems[i];
      for (std::size_t j = 0; j < elems.size(); ++j) {
        auto const& b = elems[j];
        tally(right, j, [&](auto const& f) { for_each_right_solution(a, b, f); });
        tally(left, j, [&](auto const& f) { for_each_left_solution(a, b, f); });
      }
    }

    EquationCounts merge(std::vector<PartialIsometry> const& elems,
                         std::vector<RowCounts> const&       rows) {
      EquationCounts out;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto const& r = rows[i];
        out.nonempty += r.nonempty;
        out.nonempty_without_unit += r.nonempty_without_unit;
        out.max_units = std::max(out.max_units, r.max_units);
        if (!out.first_without_unit && r.first_without_unit != none) {
          out.first_without_unit.emplace(elems[i], elems[r.first_without_unit]);
        }
      }
      return out;
    }

  }  // namespace

  EquationScan equation_scan(Int bound, Exec exec) {
    auto const elems = oracle::bounded_elements(bound, bound);
    auto const n     = elems.size();

    std::vector<RowCounts> right(n);
    std::vector<RowCounts> left(n);
    if (exec == Exec::parallel) {
      auto const m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < m; ++i) {
        auto k = static_cast<std::size_t>(i);
        scan_row(elems, k, right[k], left[k]);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        scan_row(elems, i, right[i], left[i]);
      }
    }

    EquationScan out;
    out.coord_bound = bound;
    out.elements    = n;
    out.instances   = static_cast<std::uint64_t>(n) * n;
    out.right       = merge(elems, right);
    out.left        = merge(elems, left);
    return out;
  }

}  // namespace idinf::kernels
