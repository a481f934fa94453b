#include "valivt/parse.hpp"

#include <cctype>
#include <string>

namespace valivt {

namespace {

struct Parser {
  const FieldSpec& spec;
  std::string_view src;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& expected) {
    std::string got = pos < src.size()
                          ? "'" + std::string(1, src[pos]) + "'"
                          : "end of input";
    throw SyntaxError(pos, expected, "unexpected " + got);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) err("'" + std::string(1, c) + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t b = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos])))
      ++pos;
    return std::string(src.substr(b, pos - b));
  }

  Int integer_digits() {
    skip_ws();
    std::size_t b = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == b) err("digits");
    return Int(std::string(src.substr(b, pos - b)));
  }

  // ['-'] digits ['/' digits]
  Rat rational() {
    bool neg = eat('-');
    Int num = integer_digits();
    Rat r(num);
    if (eat('/')) {
      Int den = integer_digits();
      if (den == 0) err("nonzero denominator");
      r = Rat(num, den);
      r.canonicalize();
    }
    return neg ? Rat(-r) : r;
  }

  // ['-'] ( '(' rational ')' | rational )
  Rat exponent() {
    bool neg = eat('-');
    Rat e;
    if (eat('(')) {
      e = rational();
      expect(')');
    } else {
      e = rational();
    }
    return neg ? Rat(-e) : e;
  }

  struct Atom {
    Polynomial val;
    bool is_t = false;
  };

  Atom atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return {Polynomial::constant(
                  FieldElement::from_rational(spec, rational())),
              false};
    if (c == '(') {
      ++pos;
      Polynomial v = expr();
      expect(')');
      return {v, false};
    }
    std::size_t at = pos;
    std::string w = word();
    if (w == "t")
      return {Polynomial::constant(FieldElement::monomial(spec, Rat(1), Rat(1))),
              true};
    if (w == "X") return {Polynomial::identity(spec), false};
    if (w == "O") {
      expect('(');
      std::size_t inner = pos;
      if (word() != "t") {
        pos = inner;
        err("'t'");
      }
      Rat e(1);
      if (eat('^')) e = exponent();
      expect(')');
      return {Polynomial::constant(FieldElement::big_oh(spec, e)), false};
    }
    pos = at;
    err("a rational, 't', 'X', 'O(...)' or '('");
  }

  Polynomial pow_poly(const Polynomial& base, const Rat& e,
                      std::size_t at) {
    if (!rat_is_integer(e)) {
      if (base.degree() != 0)
        throw SyntaxError(at, "an integer exponent",
                          "fractional power of a non-monomial");
      // fractional exponents only make sense on single monomials
      FieldElement b = base.coeff(0);
      if (b.terms().size() != 1 || !b.is_exact())
        throw SyntaxError(at, "an integer exponent",
                          "fractional power of a non-monomial");
      const auto& [ex, co] = *b.terms().begin();
      if (co != 1)
        throw SyntaxError(at, "an integer exponent",
                          "fractional power of a non-monomial");
      return Polynomial::constant(
          FieldElement::monomial(spec, Rat(1), Rat(ex * e)));
    }
    long n = static_cast<long>(e.get_num().get_si());
    if (n < 0) {
      if (base.degree() != 0)
        throw SyntaxError(at, "a nonnegative exponent",
                          "negative power of a polynomial");
      return Polynomial::constant(base.coeff(0).pow(n));
    }
    Polynomial acc = Polynomial::constant(FieldElement::one(spec));
    Polynomial sq = base;
    for (long m = n; m > 0; m >>= 1) {
      if (m & 1) acc = acc.mul(sq);
      if (m > 1) sq = sq.mul(sq);
    }
    return acc;
  }

  Polynomial factor() {
    Atom a = atom();
    if (!eat('^')) return a.val;
    std::size_t at = pos;
    Rat e = exponent();
    if (a.is_t)
      return Polynomial::constant(FieldElement::monomial(spec, Rat(1), e));
    return pow_poly(a.val, e, at);
  }

  Polynomial term() {
    Polynomial v = factor();
    while (eat('*')) v = v.mul(factor());
    return v;
  }

  Polynomial expr() {
    bool neg = eat('-');
    Polynomial v = term();
    if (neg) v = v.scaled(FieldElement::from_rational(spec, Rat(-1)));
    for (;;) {
      if (eat('+'))
        v = v.add(term());
      else if (eat('-'))
        v = v.sub(term());
      else
        return v;
    }
  }

  void finish() {
    if (peek() != '\0') err("end of input");
  }

  FieldElement element() {
    std::size_t at = pos;
    Polynomial v = expr();
    if (v.degree() > 0)
      throw SyntaxError(at, "an element without X", "polynomial where an element is required");
    return v.coeff(0);
  }
};

}  // namespace

Polynomial parse_polynomial(const FieldSpec& spec, std::string_view src) {
  Parser p{spec, src};
  Polynomial v = p.expr();
  p.finish();
  return v;
}

FieldElement parse_element(const FieldSpec& spec, std::string_view src) {
  Parser p{spec, src};
  FieldElement v = p.element();
  p.finish();
  return v;
}

RestrictedSeries parse_series(const FieldSpec& spec, std::string_view src) {
  Parser p{spec, src};
  std::size_t at = p.pos;
  if (p.word() != "head") {
    p.pos = at;
    p.err("'head'");
  }
  p.expect(':');
  p.expect('[');
  std::vector<FieldElement> head;
  if (!p.eat(']')) {
    head.push_back(p.element());
    while (p.eat(',')) head.push_back(p.element());
    p.expect(']');
  }

  std::optional<GeometricTail> tail;
  if (p.eat(';')) {
    at = p.pos;
    if (p.word() != "tail") {
      p.pos = at;
      p.err("'tail'");
    }
    p.expect(':');
    at = p.pos;
    std::string kind = p.word();
    if (kind == "geometric") {
      p.expect('(');
      FieldElement scale = p.element();
      p.expect(',');
      Rat rho = p.rational();
      p.expect(',');
      Rat start = p.rational();
      p.expect(')');
      if (!rat_is_integer(start) || start < 0)
        throw SyntaxError(at, "a nonnegative integer start index",
                          "bad tail start");
      tail = GeometricTail{scale, FieldElement::monomial(spec, Rat(1), rho),
                           static_cast<long>(start.get_num().get_si())};
    } else if (kind != "none") {
      p.pos = at;
      p.err("'geometric' or 'none'");
    }
  }
  p.finish();
  return RestrictedSeries(spec, std::move(head), std::move(tail));
}

}  // namespace valivt
