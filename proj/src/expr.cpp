#include "idinf/expr.hpp"

#include <cctype>
#include <vector>

namespace idinf::expr {

  ParseError::ParseError(std::string const& message,
                         std::size_t        line,
                         std::size_t        column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column)
                           + ": " + message),
        _message(message),
        _line(line),
        _column(column) {}

  std::string normalize_minus(std::string_view text) {
    static constexpr std::string_view minus = "\xE2\x88\x92";
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
      if (text.substr(i, minus.size()) == minus) {
        out.push_back('-');
        i += minus.size();
      } else {
        out.push_back(text[i++]);
      }
    }
    return out;
  }

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(normalize_minus(text)) {}

      NodePtr expression() {
        NodePtr lhs = term();
        while (skip_ws(), peek() == '*') {
          advance();
          NodePtr rhs = term();
          lhs = std::make_unique<Node const>(
              Node{Product{std::move(lhs), std::move(rhs)}});
        }
        return lhs;
      }

      NodePtr term() {
        NodePtr node = primary();
        while (skip_ws(), peek() == '^') {
          advance();
          skip_ws();
          expect('-', "expected '-1' after '^'");
          skip_ws();
          expect('1', "expected '-1' after '^'");
          node = std::make_unique<Node const>(Node{Inverse{std::move(node)}});
        }
        return node;
      }

      NodePtr primary() {
        skip_ws();
        if (peek() == '(') {
          advance();
          NodePtr inner = expression();
          skip_ws();
          expect(')', "expected ')'");
          return inner;
        }
        if (peek() == '<') {
          return std::make_unique<Node const>(Node{Literal{literal()}});
        }
        fail(at_end() ? "unexpected end of input, expected an element"
                      : "expected '<' or '('");
      }

      PartialIsometry literal() {
        skip_ws();
        expect('<', "expected '<'");
        Isometry g = isometry();
        skip_ws();
        expect('|', "expected '|'");
        FinSet s = finset();
        skip_ws();
        expect('>', "expected '>'");
        return PartialIsometry(g, std::move(s));
      }

      Isometry isometry() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
          sign = advance() == '-' ? -1 : 1;
          skip_ws();
        }
        expect('x', "expected 'x'");
        skip_ws();
        Int shift = 0;
        if (peek() == '+' || peek() == '-') {
          bool negative = advance() == '-';
          skip_ws();
          shift = digits(negative);
        }
        return Isometry(sign, shift);
      }

      FinSet finset() {
        skip_ws();
        expect('{', "expected '{'");
        std::vector<Int> elems;
        skip_ws();
        if (peek() != '}') {
          for (;;) {
            skip_ws();
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
              negative = advance() == '-';
            }
            elems.push_back(digits(negative));
            skip_ws();
            if (peek() != ',') {
              break;
            }
            advance();
          }
        }
        expect('}', "expected ',' or '}'");
        return FinSet(std::move(elems));
      }

      void finish() {
        skip_ws();
        if (!at_end()) {
          fail("unexpected trailing input");
        }
      }

     private:
      Int digits(bool negative) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected a digit");
        }
        Int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          Int d = advance() - '0';
          // Accumulate negatively so the most negative Int is reachable.
          value = checked_sub(checked_mul(value, 10), d);
        }
        return negative ? value : checked_neg(value);
      }

      bool at_end() const noexcept {
        return _pos >= _text.size();
      }
      char peek() const noexcept {
        return at_end() ? '\0' : _text[_pos];
      }
      char advance() {
        char c = _text[_pos++];
        if (c == '\n') {
          ++_line;
          _line_start = _pos;
        }
        return c;
      }
      void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          advance();
        }
      }
      void expect(char c, char const* message) {
        if (peek() != c) {
          fail(message);
        }
        advance();
      }
      [[noreturn]] void fail(std::string const& message) const {
        throw ParseError(message, _line, _pos - _line_start + 1);
      }

      std::string _text;
      std::size_t _pos        = 0;
      std::size_t _line       = 1;
      std::size_t _line_start = 0;
    };

  }  // namespace

  NodePtr parse_expr(std::string_view text) {
    Parser  p(text);
    NodePtr root = p.expression();
    p.finish();
    return root;
  }

  PartialIsometry evaluate(Node const& node) {
    struct Visitor {
      PartialIsometry operator()(Literal const& x) const {
        return x.value;
      }
      PartialIsometry operator()(Inverse const& x) const {
        return evaluate(*x.operand).inverse();
      }
      PartialIsometry operator()(Product const& x) const {
        return evaluate(*x.lhs) * evaluate(*x.rhs);
      }
    };
    return std::visit(Visitor{}, node.kind);
  }

  PartialIsometry eval(std::string_view text) {
    return evaluate(*parse_expr(text));
  }

  PartialIsometry parse_literal(std::string_view text) {
    Parser p(text);
    auto   out = p.literal();
    p.finish();
    return out;
  }

  Isometry parse_isometry(std::string_view text) {
    Parser p(text);
    auto   out = p.isometry();
    p.finish();
    return out;
  }

  FinSet parse_finset(std::string_view text) {
    Parser p(text);
    auto   out = p.finset();
    p.finish();
    return out;
  }

  std::string print(Isometry const& g) {
    std::string out = g.sign() < 0 ? "-x" : "+x";
    if (g.shift() >= 0) {
      out += '+';
    }
    return out + std::to_string(g.shift());
  }

  std::string print(FinSet const& s) {
    std::string out = "{";
    bool        first = true;
    for (Int x : s) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    }
    return out + "}";
  }

  std::string print(PartialIsometry const& p) {
    return "<" + print(p.gamma()) + "|" + print(p.excl()) + ">";
  }

}  // namespace idinf::expr
