#include "projflow/parse.hpp"

#include <cctype>
#include <string>

#include "projflow/errors.hpp"

namespace projflow {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction2 parse() {
    RationalFunction2 r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction2 expr() {
    RationalFunction2 acc = term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  RationalFunction2 term() {
    RationalFunction2 acc = unary();
    while (true) {
      if (eat('*')) acc *= unary();
      else if (eat('/')) acc /= unary();
      else return acc;
    }
  }

  RationalFunction2 unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction2 power() {
    RationalFunction2 base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    RationalFunction2 out = RationalFunction2::constant(1);
    for (int i = 0; i < e; ++i) out *= base;
    if (neg) out = RationalFunction2::constant(1) / out;
    return out;
  }

  RationalFunction2 primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction2 inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return RationalFunction2(BivarPoly::x());
    }
    if (c == 'y') {
      ++pos_;
      return RationalFunction2(BivarPoly::y());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return RationalFunction2::constant(parse_rat(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction2 parse_rational_function(std::string_view text) { return Parser(text).parse(); }

BivarPoly parse_polynomial(std::string_view text) {
  RationalFunction2 r = parse_rational_function(text);
  if (!r.is_polynomial()) raise(Errc::ParseError, "'" + std::string(text) + "' is not a polynomial");
  return r.num();
}

}  // namespace projflow
