#include "coisored/arith/parse.hpp"

#include <cctype>

namespace coisored {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial result(ring_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial t = parse_term();
      result = negative ? result - t : result + t;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff(1);
    Monomial mono(ring_->size());
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mpz_class num(read_digits());
        skip_ws();
        if (peek() == '/') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          std::size_t col = pos_;
          mpz_class den(read_digits());
          if (den == 0) fail_at("zero denominator", col);
          Rational q(num, den);
          q.canonicalize();
          coeff *= q;
        } else {
          coeff *= Rational(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t col = pos_;
        std::string name = read_identifier();
        auto idx = ring_->index(name);
        if (!idx) fail_at("unknown variable '" + name + "'", col);
        skip_ws();
        Monomial::Exponent e = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = static_cast<Monomial::Exponent>(std::stoul(read_digits()));
        }
        mono = mono * Monomial::variable(ring_->size(), *idx, e);
      } else {
        fail(at_end() ? "unexpected end of polynomial" : std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::term(ring_, mono, coeff);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) {
    throw PolynomialSyntaxError(msg, pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace coisored
