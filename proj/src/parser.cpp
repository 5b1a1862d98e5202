#include "ncalg/parser.hpp"

#include <cctype>
#include <string>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const AlgebraPtr& algebra) : text_(text), algebra_(algebra) {}

  NcPoly parse() {
    NcPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

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

  NcPoly expr() {
    NcPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  NcPoly term() {
    NcPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    skip_ws();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' || text_[pos_] == '_'))
      fail("missing '*' (juxtaposition is not multiplication)");
    return acc;
  }

  NcPoly unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  NcPoly primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      std::size_t den_start = pos_;
      if (accept('/')) {
        skip_ws();
        den_start = pos_;
        den = integer();
      }
      try {
        return NcPoly::constant(algebra_, algebra_->field.from_fraction(num, den));
      } catch (const ArithmeticError&) {
        pos_ = den_start;
        fail(den == 0 ? "division by zero" : "denominator not invertible in " + algebra_->field.to_string());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto g = algebra_->alphabet.index_of(name);
      if (!g) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      return NcPoly::generator(algebra_, *g);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const AlgebraPtr& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const AlgebraPtr& algebra) { return ExprParser(text, algebra).parse(); }

}  // namespace ncalg
