#include <algorithm>
#include <vector>

#include "doctest.h"
#include "idinf/kernels.hpp"
#include "idinf/oracle.hpp"
#include "idinf/random.hpp"
#include "idinf/solvers.hpp"

using idinf::FinSet;
using idinf::Int;
using idinf::Isometry;
using idinf::PartialIsometry;
namespace oracle  = idinf::oracle;
namespace kernels = idinf::kernels;

namespace {

  PartialIsometry pi(int sign, Int shift, FinSet excl) {
    return PartialIsometry(Isometry(sign, shift), std::move(excl));
  }

  std::vector<PartialIsometry> brute_upset(PartialIsometry const&              p,
                                           std::vector<PartialIsometry> const& box) {
    std::vector<PartialIsometry> out;
    for (auto const& q : box) {
      if (oracle::restricts(p, q, oracle::auto_window({p, q}))) {
        out.push_back(q);
      }
    }
    return out;
  }

  // A solvable right instance b = a x, or an arbitrary pair.
  std::pair<PartialIsometry, PartialIsometry> instance(idinf::Rng& rng,
                                                       int         i) {
    auto a = idinf::random_element(rng, 6, 4);
    auto x = idinf::random_element(rng, 6, 4);
    switch (i % 3) {
      case 0:
        return {a, a * x};
      case 1:
        return {a, x * a};
      default:
        return {a, idinf::random_element(rng, 6, 4)};
    }
  }

}  // namespace

TEST_CASE("upset examples") {
  auto const box = oracle::bounded_elements(3, 3);

  auto p  = pi(+1, 0, {1, 2, 3});
  auto up = upset(p);
  CHECK(up.size() == 8);
  CHECK(up == brute_upset(p, box));
  for (auto const& q : up) {
    CHECK(leq(p, q));
  }

  auto g = PartialIsometry::unit(Isometry(-1, 2));
  CHECK(upset(g) == std::vector{g});

  CHECK(upset(pi(-1, 4, {0}))
        == std::vector{pi(-1, 4, {}), pi(-1, 4, {0})});
}

TEST_CASE("upset equals the brute-force filter on [-3, 3]") {
  auto const box   = oracle::bounded_elements(3, 1);
  auto const check = [&](std::size_t i) {
    auto const& p  = box[i];
    auto        up = upset(p);
    return up.size() == (std::size_t{1} << p.excl().size())
           && up == brute_upset(p, box);
  };
  auto result = kernels::sweep(box.size(), check, kernels::Exec::parallel);
  CHECK(result.checked == box.size());
  CHECK(result.ok());
}

TEST_CASE("upset refuses to materialize past the cutoff") {
  std::vector<Int> big;
  for (Int i = 0; i < 21; ++i) {
    big.push_back(i);
  }
  auto p = PartialIsometry::idempotent(FinSet(big));
  CHECK_THROWS_AS((void) upset(p), idinf::TooManySolutions);
  CHECK(upset(p, std::size_t{1} << 21).size() == std::size_t{1} << 21);
}

TEST_CASE("solve_right examples") {
  auto a = PartialIsometry::idempotent({0});
  auto b = pi(+1, 2, {0, 4});
  auto r = solve_right(a, b);
  std::vector expected{pi(+1, 2, {0, 4}), pi(+1, 2, {4})};
  std::sort(expected.begin(), expected.end());
  CHECK(r.solutions == expected);
  CHECK_FALSE(r.unit_member);
  CHECK(oracle::solve(a, b, oracle::Side::right,
                      oracle::solve_bound(a, b, oracle::Side::right))
        == expected);

  auto g  = PartialIsometry::unit(Isometry(-1, 7));
  auto rg = solve_right(g, g);
  CHECK(rg.solutions == std::vector{PartialIsometry()});
  CHECK(rg.unit_member == PartialIsometry());

  auto a2 = PartialIsometry::idempotent({5});
  auto b2 = PartialIsometry();
  CHECK(solve_right(a2, b2).empty());
  CHECK(oracle::solve(a2, b2, oracle::Side::right,
                      FinSet{-6, -5, -4, 0, 4, 5, 6})
            .empty());
}

TEST_CASE("solve_left examples") {
  auto a = PartialIsometry::idempotent({0});
  auto b = pi(+1, 2, {0, 4});
  // L(a|b) = {x^-1 : x in R(a^-1|b^-1)}
  auto l = solve_left(a, b);
  auto r = solve_right(a.inverse(), b.inverse());
  std::vector<PartialIsometry> dual;
  for (auto const& x : r.solutions) {
    dual.push_back(x.inverse());
  }
  std::sort(dual.begin(), dual.end());
  CHECK(l.solutions == dual);

  auto e  = PartialIsometry::idempotent({1, 2});
  auto le = solve_left(e, e);
  CHECK(le.solutions
        == oracle::solve(e, e, oracle::Side::left,
                         oracle::solve_bound(e, e, oracle::Side::left)));
  CHECK(std::find(le.solutions.begin(), le.solutions.end(), e)
        != le.solutions.end());
  CHECK(le.size() == 4);
  for (auto const& x : le.solutions) {
    CHECK(x.is_idempotent());
    CHECK(x * e == e);
  }

  auto ua = PartialIsometry::unit(Isometry(-1, 3));
  auto ub = PartialIsometry::unit(Isometry(+1, 8));
  auto lu = solve_left(ua, ub);
  CHECK(lu.solutions == std::vector{ub * ua.inverse()});
  CHECK(lu.unit_member == ub * ua.inverse());
}

TEST_CASE("solvers agree with the exhaustive oracle") {
  idinf::Rng rng(38);
  for (int i = 0; i < 1500; ++i) {
    auto [a, b] = instance(rng, i);
    for (auto side : {oracle::Side::right, oracle::Side::left}) {
      auto got = side == oracle::Side::right ? solve_right(a, b)
                                             : solve_left(a, b);
      auto want = oracle::solve(a, b, side, oracle::solve_bound(a, b, side));
      REQUIRE(got.solutions == want);
      std::size_t units = 0;
      for (auto const& x : got.solutions) {
        REQUIRE((side == oracle::Side::right ? a * x : x * a) == b);
        units += x.is_unit() ? 1 : 0;
      }
      REQUIRE(units <= 1);
      REQUIRE(got.unit_member.has_value() == (units == 1));
      auto count = side == oracle::Side::right ? count_right_solutions(a, b)
                                               : count_left_solutions(a, b);
      REQUIRE(count == got.size());
      if (!got.empty()) {
        REQUIRE(got.size() == std::size_t{1} << a.excl().size());
      }
    }
    // x in R(a|b) iff x^-1 in L(a^-1|b^-1)
    auto r = solve_right(a, b);
    auto l = solve_left(a.inverse(), b.inverse());
    std::vector<PartialIsometry> dual;
    for (auto const& x : l.solutions) {
      dual.push_back(x.inverse());
    }
    std::sort(dual.begin(), dual.end());
    REQUIRE(r.solutions == dual);
  }
}

TEST_CASE("solutions outside the oracle bound do not exist") {
  // Widen the search box well past the bound; nothing new appears.
  idinf::Rng rng(400);
  for (int i = 0; i < 100; ++i) {
    auto [a, b] = instance(rng, i);
    if (b.excl().size() > 6) {
      continue;
    }
    for (auto side : {oracle::Side::right, oracle::Side::left}) {
      auto bound = oracle::solve_bound(a, b, side);
      std::vector<Int> wide(bound.begin(), bound.end());
      wide.push_back(bound.empty() ? 100 : bound.back() + 1);
      wide.push_back(bound.empty() ? -100 : bound.front() - 1);
      REQUIRE(oracle::solve(a, b, side, FinSet(wide))
              == oracle::solve(a, b, side, bound));
    }
  }
}

TEST_CASE("streaming enumeration matches the materialized set") {
  auto a = PartialIsometry::idempotent({0, 1, 2});
  auto b = pi(-1, 1, {0, 1, 2, 9});
  std::vector<PartialIsometry> seen;
  for_each_right_solution(a, b, [&](PartialIsometry const& x) {
    seen.push_back(x);
    return true;
  });
  std::sort(seen.begin(), seen.end());
  CHECK(seen == solve_right(a, b).solutions);

  // (X_a) under the reflection is {-1,0,1}, so this b admits 8 left solutions.
  auto        left_b = pi(-1, 1, {-1, 0, 1, 9});
  std::size_t visits = 0;
  for_each_left_solution(a, left_b, [&](PartialIsometry const&) {
    return ++visits < 3;
  });
  CHECK(visits == 3);
  CHECK_THROWS_AS((void) solve_right(a, b, 4), idinf::TooManySolutions);
}

TEST_CASE("green examples") {
  auto e = PartialIsometry::idempotent({3, 8});
  CHECK(green(e, e) == idinf::GreenRelations{true, true, true, true});

  auto p = PartialIsometry::idempotent({0, 1});
  auto q = PartialIsometry::idempotent({5, 6});
  auto g = green(p, q);
  CHECK_FALSE(g.L);
  CHECK_FALSE(g.R);
  CHECK_FALSE(g.H);
  CHECK(g.D);
  CHECK(oracle::green(p, q) == g);

  auto q2 = PartialIsometry::idempotent({0, 2});
  CHECK_FALSE(green(p, q2).D);
  CHECK_FALSE(oracle::green(p, q2).D);
}

TEST_CASE("congruent handles reflections") {
  CHECK(congruent(FinSet{0, 1, 4}, FinSet{10, 13, 14}));
  CHECK_FALSE(congruent(FinSet{0, 1, 4}, FinSet{10, 11, 15}));
  CHECK(congruent(FinSet{}, FinSet{}));
  CHECK(congruent(FinSet{3}, FinSet{-9}));
  CHECK_FALSE(congruent(FinSet{3}, FinSet{}));
}

TEST_CASE("green agrees with the oracle and with idempotents") {
  auto const box   = oracle::bounded_elements(1, 1);
  auto const check = [&](std::size_t k) {
    auto const& p = box[k / box.size()];
    auto const& q = box[k % box.size()];
    auto        g = green(p, q);
    return g == oracle::green(p, q)
           && g.R == (p * p.inverse() == q * q.inverse())
           && g.L == (p.inverse() * p == q.inverse() * q);
  };
  auto result
      = kernels::sweep(box.size() * box.size(), check, kernels::Exec::parallel);
  CHECK(result.ok());
}
