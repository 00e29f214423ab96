// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/parser.hpp"

#include <cctype>
#include <limits>

namespace ccr::cli {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
  std::string out = "expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k > 0) out += k + 1 == expected.size() ? " or " : ", ";
    out += expected[k];
  }
  return out + "; found " + found;
}

enum class Kind { Number, Ident, Symbol, End };

struct Token {
  Kind kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    const auto ch = static_cast<unsigned char>(s[k]);
    if (std::isspace(ch)) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    if (std::isdigit(ch)) {
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k < s.size() && s[k] == '.') {
        ++k;
        if (k == s.size() || !std::isdigit(static_cast<unsigned char>(s[k]))) {
          throw ParseError(k, {"digit"}, k == s.size() ? "end of input" : "'" + std::string(1, s[k]) + "'");
        }
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      }
      out.push_back({Kind::Number, s.substr(start, k - start), start});
    } else if (std::isalpha(ch) || ch == '_') {
      while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
      out.push_back({Kind::Ident, s.substr(start, k - start), start});
    } else if (std::string("+-*/^()").find(static_cast<char>(ch)) != std::string::npos) {
      out.push_back({Kind::Symbol, std::string(1, static_cast<char>(ch)), start});
      ++k;
    } else {
      throw ParseError(start, "unexpected character '" + std::string(1, static_cast<char>(ch)) + "'");
    }
  }
  out.push_back({Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Presentation* p) : tokens_(tokenize(text)), p_(p) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Kind::End) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const { return peek().kind == Kind::Symbol && peek().text[0] == c; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.column, std::move(expected), t.kind == Kind::End ? "end of input" : "'" + t.text + "'");
  }

  void expect(char c) {
    if (!at_symbol(c)) fail({"'" + std::string(1, c) + "'"});
    ++pos_;
  }

  std::uint32_t natural() {
    if (peek().kind != Kind::Number || peek().text.find('.') != std::string::npos) fail({"natural number"});
    const Token& t = peek();
    unsigned long long value = 0;
    try {
      value = std::stoull(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.column, "number '" + t.text + "' is too large");
    }
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(t.column, "number '" + t.text + "' is too large");
    }
    ++pos_;
    return static_cast<std::uint32_t>(value);
  }

  Expr expr() {
    Expr out = term();
    while (at_symbol('+') || at_symbol('-')) {
      const bool plus = at_symbol('+');
      ++pos_;
      Expr rhs = term();
      out = plus ? out + rhs : out - rhs;
    }
    return out;
  }

  Expr term() {
    Expr out = unary();
    while (at_symbol('*') || at_symbol('/')) {
      const bool times = at_symbol('*');
      const std::size_t column = peek().column;
      ++pos_;
      Expr rhs = unary();
      if (times) {
        out = out * rhs;
        continue;
      }
      if (!rhs.is_scalar() && !rhs.is_zero()) throw ParseError(column, "divisor must be a scalar");
      if (rhs.is_zero()) throw ParseError(column, "division by zero");
      out = rhs.coefficient({}).inverse() * out;
    }
    return out;
  }

  Expr unary() {
    if (at_symbol('-')) {
      ++pos_;
      return -unary();
    }
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    if (!at_symbol('^')) return base;
    ++pos_;
    const std::uint32_t n = natural();
    Expr out(1);
    for (std::uint32_t k = 0; k < n; ++k) out = out * base;
    return out;
  }

  Expr generator(Generator g, std::size_t column) {
    if (p_ != nullptr && !p_->allows(g)) {
      throw ParseError(column, "generator " + g.to_string() + " is not available in the " +
                                   to_string(p_->variant) + " variant");
    }
    return Expr::generator(g);
  }

  Expr atom() {
    const Token t = peek();
    static const std::vector<std::string> kAtoms = {"number", "'i'", "'kappa'", "'s'", "'r2'", "generator", "'('"};
    if (t.kind == Kind::Number) {
      ++pos_;
      return Expr(Scalar(parse_rational(t.text)));
    }
    if (at_symbol('(')) {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (t.kind != Kind::Ident) fail(kAtoms);
    ++pos_;
    const std::string& id = t.text;
    if (id == "i") return Expr(Scalar::i());
    if (id == "r2") return Expr(Scalar::r2());
    if (id == "kappa" || id == "s") return Expr(Scalar::param(id));
    if (id == "one") return Expr(1);
    if (id == "I") return generator(Generator::unit_I(), t.column);
    if (id == "K") return generator(Generator::k(), t.column);
    if (id == "Kinv") return generator(Generator::k_inv(), t.column);
    if (id == "phi" || id == "pi" || id == "ap" || id == "am") {
      expect('(');
      const std::uint32_t j = natural();
      expect(')');
      if (id == "phi") return generator(Generator::phi(j), t.column);
      if (id == "pi") return generator(Generator::pi(j), t.column);
      if (id == "ap") return generator(Generator::a_plus(j), t.column);
      return generator(Generator::a_minus(j), t.column);
    }
    throw ParseError(t.column, "unknown identifier '" + id + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Presentation* p_;
};

}  // namespace

ParseError::ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("column " + std::to_string(column) + ": " + describe(expected, found)),
      column_(column),
      expected_(std::move(expected)) {}

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

Expr parse_expr(const std::string& text, const Presentation* p) { return Parser(text, p).parse(); }

}  // namespace ccr::cli
