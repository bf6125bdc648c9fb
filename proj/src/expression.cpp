#include "noether/expression.hpp"

#include <algorithm>
#include <cctype>

#include "noether/error.hpp"

namespace noether {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* vars, int n)
      : text_(text), vars_(vars), n_(n) {}

  LaurentFraction parse_value() {
    LaurentFraction v = expr();
    expect_end();
    return v;
  }

  long long parse_int() {
    long long v = iexpr();
    expect_end();
    return v;
  }

 private:
  int nvars() const { return static_cast<int>(vars_->size()); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // integer sublanguage
  long long iexpr() {
    long long v = iterm();
    for (;;) {
      if (accept('+')) v += iterm();
      else if (accept('-')) v -= iterm();
      else return v;
    }
  }

  long long iterm() {
    long long v = ifactor();
    while (accept('*')) v *= ifactor();
    return v;
  }

  long long ifactor() {
    if (accept('-')) return -ifactor();
    long long base;
    if (accept('(')) {
      base = iexpr();
      expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = number();
    } else {
      const std::string id = identifier();
      if (id != "n") fail("unknown symbol '" + id + "' in integer expression");
      base = n_;
    }
    if (accept('^')) {
      const long long e = ifactor();
      if (e < 0) fail("negative integer power");
      long long r = 1;
      for (long long k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  // value language
  LaurentFraction expr() {
    LaurentFraction v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  LaurentFraction term() {
    LaurentFraction v = unary();
    for (;;) {
      if (accept('*')) v = v * unary();
      else if (accept('/')) v = v / unary();
      else return v;
    }
  }

  LaurentFraction unary() {
    if (accept('-')) return -unary();
    LaurentFraction base = atom();
    if (accept('^')) {
      const long long e = ifactor();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  LaurentFraction atom() {
    if (accept('(')) {
      LaurentFraction v = expr();
      expect(')');
      return v;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return LaurentFraction::constant(nvars(), CyclotomicInt(number()));
    const std::string id = identifier();
    if (id.empty()) fail("expected an operand");
    const auto it = std::find(vars_->begin(), vars_->end(), id);
    if (it != vars_->end())
      return LaurentFraction::variable(nvars(), static_cast<int>(it - vars_->begin()));
    if (id == "zeta") {
      if (n_ < 3) fail("zeta needs n >= 3");
      return LaurentFraction::constant(nvars(), CyclotomicInt::zeta(std::int64_t{1} << (n_ - 3)));
    }
    if (id == "i") return LaurentFraction::constant(nvars(), CyclotomicInt::zeta(4));
    fail("unknown variable '" + id + "'");
  }

  std::string_view text_;
  const std::vector<std::string>* vars_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentFraction parse_expression(std::string_view text, const std::vector<std::string>& variables,
                                 int n) {
  return Parser(text, &variables, n).parse_value();
}

long long parse_integer_expression(std::string_view text, int n) {
  static const std::vector<std::string> none;
  return Parser(text, &none, n).parse_int();
}

}  // namespace noether
