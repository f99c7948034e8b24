#include <cctype>
#include <limits>

#include "qplane/scalars.hpp"

namespace qplane {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarExpr parse() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long integer() {
    skip_ws();
    if (!peek_digit()) fail("expected integer");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  ScalarExpr expr() {
    ScalarExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ScalarExpr d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  ScalarExpr factor() {
    if (accept('-')) return -factor();
    bool is_q = false;
    ScalarExpr b = base(is_q);
    if (!accept('^')) return b;
    // exponent
    if (accept('(')) {
      const bool neg = accept('-');
      long n = integer();
      if (neg) n = -n;
      if (accept('/')) {
        const long d = integer();
        if (d != 2) fail("only half-integer fractional exponents are supported");
        if (!is_q) fail("fractional exponent is only allowed on q");
        expect(')');
        return ScalarExpr::q_half(static_cast<int>(n));
      }
      expect(')');
      return b.pow(static_cast<int>(n));
    }
    const bool neg = accept('-');
    long n = integer();
    if (neg) n = -n;
    if (b.is_zero() && n < 0) throw ParseError("division by zero", pos_);
    return b.pow(static_cast<int>(n));
  }

  ScalarExpr base(bool& is_q) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      ScalarExpr e = expr();
      expect(')');
      return e;
    }
    if (peek_digit()) return ScalarExpr(integer());
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view id = text_.substr(start, pos_ - start);
      if (id == "i") return ScalarExpr::i();
      if (id == "r") return ScalarExpr::var(Var::r);
      if (id == "q") {
        is_q = true;
        return ScalarExpr::q();
      }
      if (id == "h") return ScalarExpr::var(Var::h);
      if (id == "zeta") return ScalarExpr::var(Var::z);
      throw ParseError("unknown identifier '" + std::string(id) + "'", start);
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }
};

}  // namespace

ScalarExpr parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace qplane
