#include "arcstab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "arcstab/errors.hpp"

namespace arcstab {

namespace {

template <typename Poly>
class Parser {
 public:
  using MakeVar = std::function<Poly(const std::string&, std::size_t)>;
  using MakeConst = std::function<Poly(const Rational&)>;
  using Power = std::function<Poly(const Poly&, std::int64_t, std::size_t)>;

  Parser(std::string_view text, MakeVar var, MakeConst konst, Power power)
      : text_(text), make_var_(std::move(var)), make_const_(std::move(konst)), power_(std::move(power)) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Poly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  Poly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    bool negative = accept('-');
    skip_ws();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 9) fail("exponent too large");
    std::int64_t k = std::stoll(digits);
    return power_(base, negative ? -k : k, at);
  }

  Poly atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den(1);
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) {
          pos_ = save;
          fail("expected denominator");
        }
        den = Integer(d);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return make_const_(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      return make_var_(name, at);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MakeVar make_var_;
  MakeConst make_const_;
  Power power_;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const VarList& vars) {
  Parser<MultiPoly> p(
      text,
      [&](const std::string& name, std::size_t at) {
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
          throw ParseError("unknown variable '" + name + "'", at);
        }
        return MultiPoly::variable(vars, name);
      },
      [&](const Rational& c) { return MultiPoly::constant(vars, c); },
      [](const MultiPoly& base, std::int64_t k, std::size_t at) {
        if (k < 0) throw ParseError("negative exponent in a polynomial", at);
        return base.pow(static_cast<unsigned>(k));
      });
  return p.parse();
}

LaurentPoly parse_laurent(std::string_view text, const std::string& var) {
  Parser<LaurentPoly> p(
      text,
      [&](const std::string& name, std::size_t at) {
        if (name != var) throw ParseError("unknown variable '" + name + "'", at);
        return LaurentPoly::t();
      },
      [](const Rational& c) { return LaurentPoly(c); },
      [](const LaurentPoly& base, std::int64_t k, std::size_t at) {
        if (k < 0 && !base.is_monomial()) throw ParseError("negative power of a non-monomial", at);
        return base.pow(k);
      });
  return p.parse();
}

}  // namespace arcstab
