#include <cctype>
#include <string>

#include "isored/error.hpp"
#include "isored/ratfield.hpp"

namespace isored {
namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  RatFunc ratfunc() {
    Poly num = side();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      Poly den = side();
      if (den.is_zero()) fail("denominator is the zero polynomial");
      finish();
      return RatFunc(std::move(num), std::move(den));
    }
    finish();
    return RatFunc(num);
  }

  Poly poly_only() {
    Poly p = poly();
    finish();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "bad literal \"" + std::string(text_) + "\" at offset " +
                                           std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Raw lookahead without skipping whitespace.
  char raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  // side := "(" poly ")" | poly
  Poly side() {
    if (peek() == '(') {
      const std::size_t save = pos_;
      try {
        ++pos_;
        Poly p = poly();
        expect(')');
        const char next = peek();
        if (next == '\0' || next == '/' || next == ')') return p;
      } catch (const Error&) {
      }
      pos_ = save;
    }
    return poly();
  }

  Poly poly() {
    Poly acc;
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++pos_;
    }
    Poly t = term();
    acc = negative ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly next = term();
      if (c == '+') {
        acc += next;
      } else {
        acc -= next;
      }
    }
    return acc;
  }

  // term := coeff | coeff "*" mono | mono
  Poly term() {
    char c = peek();
    if (c == 'l') return Poly::monomial(Gauss(1), monomial_degree());
    Gauss coeff;
    if (c == '(') {
      ++pos_;
      coeff = gauss();
      expect(')');
    } else {
      coeff = scalar_term();
    }
    if (peek() == '*') {
      ++pos_;
      if (peek() != 'l') fail("expected 'l' after '*'");
      return Poly::monomial(coeff, monomial_degree());
    }
    return Poly(coeff);
  }

  std::size_t monomial_degree() {
    expect('l');
    if (raw() == '^') {
      ++pos_;
      return static_cast<std::size_t>(unsigned_int().get_ui());
    }
    return 1;
  }

  // gauss inside parentheses: optional sign, then one or two scalar terms.
  Gauss gauss() {
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++pos_;
    }
    Gauss value = scalar_term();
    if (negative) value = -value;
    c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      Gauss second = scalar_term();
      if (second.is_real() == value.is_real()) fail("complex literal needs one real and one imaginary part");
      value += (c == '-') ? -second : second;
    }
    return value;
  }

  // frac | frac "i" | "i"
  Gauss scalar_term() {
    char c = peek();
    if (c == 'i') {
      ++pos_;
      return Gauss::imag_unit();
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number, 'i' or 'l'");
    Rational value(unsigned_int());
    // "a/b" is a fraction only when a digit follows the slash.
    if (raw() == '/' && std::isdigit(static_cast<unsigned char>(raw(1)))) {
      ++pos_;
      mpz_class den = unsigned_int();
      if (den == 0) fail("zero denominator in fraction");
      value = Rational(value.get_num(), den);
      value.canonicalize();
    }
    if (raw() == 'i') {
      ++pos_;
      return Gauss(Rational(0), value);
    }
    return Gauss(value);
  }

  mpz_class unsigned_int() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(raw()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return LiteralParser(text).ratfunc(); }

Poly parse_poly(std::string_view text) { return LiteralParser(text).poly_only(); }

Gauss parse_gauss(std::string_view text) {
  RatFunc f = parse_ratfunc(text);
  if (!f.is_constant()) {
    throw Error(ErrorCode::ParseError, "expected a constant literal, got \"" + std::string(text) + "\"");
  }
  return f(Gauss());
}

}  // namespace isored
