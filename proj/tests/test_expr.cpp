#include <limits>
#include <string>

#include "doctest.h"
#include "idinf/expr.hpp"
#include "idinf/random.hpp"

using idinf::FinSet;
using idinf::Isometry;
using idinf::PartialIsometry;
namespace expr = idinf::expr;

TEST_CASE("evaluating words") {
  CHECK(expr::print(expr::eval("<+x+1|{0}> * <+x+1|{0}>")) == "<+x+2|{-1,0}>");
  CHECK(expr::eval("<+x+0|{}>") == PartialIsometry());
  CHECK(expr::print(expr::eval("<+x+1|{0}>^-1")) == "<+x-1|{1}>");
}

TEST_CASE("precedence and grouping") {
  auto a = expr::parse_literal("<+x+1|{0}>");
  auto b = expr::parse_literal("<-x+3|{2,5}>");
  auto c = expr::parse_literal("<+x-2|{}>");
  CHECK(expr::eval("<+x+1|{0}> * <-x+3|{2,5}>^-1") == a * b.inverse());
  CHECK(expr::eval("(<+x+1|{0}> * <-x+3|{2,5}>)^-1") == (a * b).inverse());
  CHECK(expr::eval("<+x+1|{0}>*<-x+3|{2,5}>*<+x-2|{}>") == (a * b) * c);
  CHECK(expr::eval("((<+x+1|{0}>))^-1^-1") == a);
  CHECK(expr::eval("  < - x - 2 | { 3 , -1 } >  ")
        == PartialIsometry(Isometry(-1, -2), {-1, 3}));
}

TEST_CASE("literal forms") {
  CHECK(expr::parse_literal("<-x+1|{}>") == PartialIsometry::unit(Isometry(-1, 1)));
  CHECK(expr::parse_literal("<+x-3|{}>") == PartialIsometry::unit(Isometry(+1, -3)));
  CHECK(expr::parse_literal("<x|{2,2,1}>") == PartialIsometry::idempotent({1, 2}));
  CHECK(expr::parse_isometry("-x+4") == Isometry(-1, 4));
  CHECK(expr::parse_finset("{5,-1,5}") == FinSet{-1, 5});
  CHECK(expr::print(PartialIsometry(Isometry(-1, -7), {3, -2}))
        == "<-x-7|{-2,3}>");
}

TEST_CASE("unicode minus is accepted") {
  CHECK(expr::parse_literal("<\xE2\x88\x92x\xE2\x88\x92" "3|{\xE2\x88\x92" "1}>")
        == PartialIsometry(Isometry(-1, -3), {-1}));
  CHECK(expr::print(expr::eval("<+x+1|{0}>^\xE2\x88\x92" "1")) == "<+x-1|{1}>");
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](std::string const& text) {
    try {
      (void) expr::eval(text);
    } catch (expr::ParseError const& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{std::size_t{0}, std::size_t{0}};
  };
  CHECK(error_at("<+x+1|{0}") == std::pair<std::size_t, std::size_t>{1, 10});
  CHECK(error_at("<+y+1|{}>") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(error_at("<+x+1|{}> *") == std::pair<std::size_t, std::size_t>{1, 12});
  CHECK(error_at("<+x+1|{}>\n  ^2") == std::pair<std::size_t, std::size_t>{2, 4});
  CHECK(error_at("<+x+1|{}> <+x|{}>") == std::pair<std::size_t, std::size_t>{1, 11});
  CHECK(error_at("<+x+1|{1,}>") == std::pair<std::size_t, std::size_t>{1, 10});
  CHECK(error_at("") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS((void) expr::parse_literal("<+x|{}> * <+x|{}>"), expr::ParseError);
}

TEST_CASE("out-of-range numbers are overflow, not wrap") {
  CHECK_THROWS_AS((void) expr::parse_literal("<+x+9223372036854775808|{}>"),
                  idinf::OverflowError);
  CHECK(expr::parse_literal("<+x-9223372036854775808|{}>").gamma().shift()
        == std::numeric_limits<idinf::Int>::min());
  CHECK_THROWS_AS((void) expr::eval("<+x+9223372036854775807|{}> * <+x+1|{}>"),
                  idinf::OverflowError);
}

TEST_CASE("print then parse is a fixed point") {
  idinf::Rng rng(808);
  for (int i = 0; i < 10000; ++i) {
    auto        p    = idinf::random_element(rng, i % 2 ? 1000 : 5, 6);
    std::string text = expr::print(p);
    REQUIRE(expr::parse_literal(text) == p);
    REQUIRE(expr::print(expr::parse_literal(text)) == text);
  }
}
