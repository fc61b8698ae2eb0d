#pragma once

// Text syntax for polynomials:
//   expr   := term (('+' | '-') term)*
//   term   := ['+' | '-'] [integer] ('*'? factor)*
//   factor := variable ('^' posint)? | '(' expr ')' ('^' posint)?
// Whitespace is insignificant.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toricsegre/error.hpp"
#include "toricsegre/polynomial.hpp"

namespace toricsegre {

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& names) : text_(text), n_(names.size()) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) error("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Syntax, "syntax error at position " + std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(text_) + "\"");
  }

  // Input ended right after an operator: point at the operator.
  [[noreturn]] void dangling_operator() {
    pos_ = *last_op_;
    error(std::string("operator '") + text_[pos_] + "' is missing its operand");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '_' || std::isalpha(static_cast<unsigned char>(c));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (peek('+')) {
        last_op_ = pos_++;
        acc += term();
      } else if (peek('-')) {
        last_op_ = pos_++;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Rational sign = 1;
    while (peek('+') || peek('-')) {
      if (text_[pos_] == '-') sign = -sign;
      last_op_ = pos_++;
    }
    skip();
    Polynomial acc = Polynomial::constant(n_, sign);
    bool any = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      acc = Rational(integer()) * acc;
      any = true;
    }
    while (true) {
      bool star = false;
      if (peek('*')) {
        last_op_ = pos_++;
        star = true;
      }
      if (at_factor_start()) {
        acc *= factor();
        any = true;
      } else if (star) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          acc = Rational(integer()) * acc;
        else if (pos_ == text_.size())
          dangling_operator();
        else
          error("expected a factor after '*'");
      } else {
        break;
      }
    }
    if (!any && pos_ == text_.size() && last_op_) dangling_operator();
    if (!any) error(pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'" : "unexpected end of input");
    return acc;
  }

  Polynomial factor() {
    Polynomial base;
    if (peek('(')) {
      ++pos_;
      base = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail(ErrorCode::UnknownVariable,
             "unknown variable '" + name + "' at position " + std::to_string(start) + " in \"" + std::string(text_) + "\"");
      }
      base = Polynomial::variable(n_, it->second);
    }
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        error("expected a positive exponent after '^'");
      const Integer e = integer();
      if (e <= 0 || e > 10000) error("exponent must be a positive integer");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> last_op_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return detail::PolynomialParser(text, names).parse();
}

}  // namespace toricsegre
