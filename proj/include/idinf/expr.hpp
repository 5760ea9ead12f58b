#ifndef IDINF_EXPR_HPP_
#define IDINF_EXPR_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "idinf/finset.hpp"
#include "idinf/isometry.hpp"
#include "idinf/partial_isometry.hpp"

// Surface syntax for elements and words.
//
//   literal  <SIGNx+A|{I1,I2,...}>     e.g. <+x+3|{0,2}>, <-x+1|{}>, <+x-3|{}>
//   expr     term ('*' term)*           product, applied left to right
//   term     primary ('^-1')*           inverse binds tighter than '*'
//   primary  literal | '(' expr ')'
//
// Whitespace between tokens is ignored. U+2212 MINUS SIGN is read as '-'.

namespace idinf::expr {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column);

    // 1-based.
    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }
    [[nodiscard]] std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::string _message;
    std::size_t _line;
    std::size_t _column;
  };

  struct Node;
  using NodePtr = std::unique_ptr<Node const>;

  struct Literal {
    PartialIsometry value;
  };
  struct Inverse {
    NodePtr operand;
  };
  struct Product {
    NodePtr lhs;
    NodePtr rhs;
  };

  struct Node {
    std::variant<Literal, Inverse, Product> kind;
  };

  // Replaces every U+2212 with ASCII '-'.
  [[nodiscard]] std::string normalize_minus(std::string_view text);

  [[nodiscard]] NodePtr parse_expr(std::string_view text);
  [[nodiscard]] PartialIsometry evaluate(Node const& node);
  // parse_expr followed by evaluate.
  [[nodiscard]] PartialIsometry eval(std::string_view text);

  // Exactly one literal, nothing else.
  [[nodiscard]] PartialIsometry parse_literal(std::string_view text);
  // "+x+3", "-x-1", "+x" (shift 0).
  [[nodiscard]] Isometry parse_isometry(std::string_view text);
  // "{}", "{0,2,-5}"; unsorted input and repeats are accepted.
  [[nodiscard]] FinSet parse_finset(std::string_view text);

  [[nodiscard]] std::string print(Isometry const& g);
  [[nodiscard]] std::string print(FinSet const& s);
  [[nodiscard]] std::string print(PartialIsometry const& p);

}  // namespace idinf::expr

#endif  // IDINF_EXPR_HPP_
