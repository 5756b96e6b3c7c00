// Recursive-descent parser for expressions and function specs.

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "jumpdet/errors.hpp"
#include "jumpdet/expression.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/funcspec.hpp"

namespace jumpdet {

namespace {

enum class TokenKind { number, identifier, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  double value = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token tok{TokenKind::symbol, std::string(1, c), 0.0, line, col};
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.'))
        ++j;
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      tok.kind = TokenKind::number;
      tok.text = std::string(src.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.value);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || !std::isfinite(tok.value)) {
        throw ParseError("malformed number '" + tok.text + "'", line, col);
      }
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      tok.kind = TokenKind::identifier;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("+-*/^()[],;:{}").find(c) != std::string_view::npos) {
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::end, "<end of input>", 0.0, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == TokenKind::end; }

  bool accept_symbol(char c) {
    if (peek().kind == TokenKind::symbol && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_keyword(std::string_view kw) {
    if (peek().kind == TokenKind::identifier && peek().text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_symbol(char c) {
    if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(peek(), what); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& what) {
    throw ParseError(what + " (found '" + t.text + "')", t.line, t.column);
  }

  // expr := term (('+' | '-') term)*
  Expression expression() {
    Expression lhs = term();
    for (;;) {
      if (accept_symbol('+')) {
        lhs = Expression::binary(BinaryOp::add, lhs, term());
      } else if (accept_symbol('-')) {
        lhs = Expression::binary(BinaryOp::subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  // Constant expression (no x) evaluated to a finite double.
  double constant() {
    const Token start = peek();
    const Expression e = expression();
    if (e.depends_on_variable()) fail_at(start, "expected a constant");
    const double v = e.evaluate(0.0);
    if (!std::isfinite(v)) fail_at(start, "constant is not finite");
    return v;
  }

 private:
  // term := unary (('*' | '/') unary)*
  Expression term() {
    Expression lhs = unary();
    for (;;) {
      if (accept_symbol('*')) {
        lhs = Expression::binary(BinaryOp::multiply, lhs, unary());
      } else if (accept_symbol('/')) {
        lhs = Expression::binary(BinaryOp::divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  // unary := '-' unary | power
  Expression unary() {
    if (accept_symbol('-')) return Expression::negate(unary());
    return power();
  }

  // power := primary ['^' unary]; the exponent must be an integer constant.
  Expression power() {
    Expression base = primary();
    if (peek().kind == TokenKind::symbol && peek().text[0] == '^') {
      const Token op = peek();
      ++pos_;
      const Token at = peek();
      Expression exponent = unary();
      if (exponent.depends_on_variable()) fail_at(at, "exponent must not depend on x");
      const double n = exponent.evaluate(0.0);
      if (!std::isfinite(n) || n != std::floor(n)) fail_at(at, "exponent must be an integer");
      (void)op;
      return Expression::binary(BinaryOp::power, base, exponent);
    }
    return base;
  }

  Expression primary() {
    const Token t = peek();
    switch (t.kind) {
      case TokenKind::number:
        ++pos_;
        return Expression::number(t.value);
      case TokenKind::identifier: {
        ++pos_;
        if (t.text == "x") return Expression::variable();
        if (t.text == "pi") return Expression::pi();
        const auto fn = function_from_name(t.text);
        if (!fn) {
          if (peek().kind == TokenKind::symbol && peek().text[0] == '(') {
            throw ArityError("unknown function '" + t.text + "'", t.line, t.column);
          }
          fail_at(t, "unknown identifier '" + t.text + "'");
        }
        if (!accept_symbol('(')) fail("expected '(' after " + t.text);
        Expression arg = expression();
        if (peek().kind == TokenKind::symbol && peek().text[0] == ',') {
          throw ArityError(t.text + " takes exactly one argument", peek().line, peek().column);
        }
        expect_symbol(')');
        return Expression::call(*fn, arg);
      }
      case TokenKind::symbol:
        if (t.text[0] == '(') {
          ++pos_;
          Expression inner = expression();
          expect_symbol(')');
          return inner;
        }
        fail("expected an operand");
      case TokenKind::end:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct PieceDecl {
  Expression expr;
  std::optional<Interval> interval;
  Token where;
};

}  // namespace

Expression parse_expression(std::string_view text) {
  Parser p(text);
  Expression e = p.expression();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return e;
}

PiecewiseFunction parse_function_spec(std::string_view text) {
  Parser p(text);
  std::optional<Interval> domain;
  bool periodic = false;
  std::vector<PieceDecl> pieces;
  std::optional<std::vector<JumpMark>> jumps;

  const Token first = p.peek();
  if (p.accept_keyword("domain")) {
    p.expect_symbol('[');
    const double lo = p.constant();
    p.expect_symbol(',');
    const double hi = p.constant();
    p.expect_symbol(']');
    if (!(lo < hi)) Parser::fail_at(first, "domain must satisfy lo < hi");
    domain = Interval{lo, hi};
    periodic = p.accept_keyword("periodic");
    if (!p.at_end()) p.expect_symbol(';');
  }

  while (!p.at_end()) {
    const Token where = p.peek();
    if (p.accept_keyword("piece")) {
      if (jumps) Parser::fail_at(where, "pieces must precede the jumps declaration");
      Expression e = p.expression();
      std::optional<Interval> iv;
      if (p.accept_keyword("on")) {
        if (!p.accept_symbol('[') && !p.accept_symbol('(')) p.fail("expected '[' or '('");
        const double lo = p.constant();
        p.expect_symbol(',');
        const double hi = p.constant();
        if (!p.accept_symbol(']') && !p.accept_symbol(')')) p.fail("expected ']' or ')'");
        if (!(lo < hi)) Parser::fail_at(where, "piece interval must satisfy lo < hi");
        iv = Interval{lo, hi};
      }
      pieces.push_back(PieceDecl{std::move(e), iv, where});
    } else if (p.accept_keyword("jumps")) {
      if (jumps) Parser::fail_at(where, "duplicate jumps declaration");
      jumps.emplace();
      p.expect_symbol('{');
      do {
        const double loc = p.constant();
        p.expect_symbol(':');
        const double mag = p.constant();
        jumps->push_back(JumpMark{loc, mag});
      } while (p.accept_symbol(','));
      p.expect_symbol('}');
    } else if (p.peek().kind == TokenKind::identifier && p.peek().text == "domain") {
      p.fail("the domain declaration must come first");
    } else {
      p.fail("expected 'piece' or 'jumps'");
    }
    if (!p.at_end()) p.expect_symbol(';');
  }

  if (pieces.empty()) Parser::fail_at(p.peek(), "at least one piece is required");

  auto located = [](const Token& t, const std::string& what) {
    return DomainError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + what);
  };

  if (pieces.size() == 1 && !pieces[0].interval) {
    if (!domain) throw located(pieces[0].where, "a piece without interval needs a domain declaration");
    pieces[0].interval = domain;
  }
  for (const auto& pc : pieces) {
    if (!pc.interval) throw located(pc.where, "piece needs an 'on' interval when there are several");
  }
  if (!domain) domain = Interval{pieces.front().interval->lo, pieces.back().interval->hi};

  if (pieces.front().interval->lo != domain->lo || pieces.back().interval->hi != domain->hi) {
    throw located(pieces.front().where, "pieces must cover the domain [" +
                                            format_double(domain->lo) + ", " +
                                            format_double(domain->hi) + "]");
  }
  std::vector<double> breakpoints;
  std::vector<Expression> exprs;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) {
      const double prev_hi = pieces[i - 1].interval->hi;
      if (pieces[i].interval->lo != prev_hi) {
        throw located(pieces[i].where, "piece starts at " + format_double(pieces[i].interval->lo) +
                                           " but the previous piece ends at " +
                                           format_double(prev_hi));
      }
      breakpoints.push_back(prev_hi);
    }
    exprs.push_back(pieces[i].expr);
  }
  if (jumps) {
    for (const auto& j : *jumps) {
      if (j.location < domain->lo || j.location > domain->hi) {
        throw located(first, "declared jump at " + format_double(j.location) + " lies outside the domain");
      }
    }
  }
  return PiecewiseFunction(*domain, std::move(breakpoints), std::move(exprs), periodic, std::move(jumps));
}

}  // namespace jumpdet
