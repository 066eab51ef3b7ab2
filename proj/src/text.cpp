// Text form of Laurent polynomials.
//
//   expr     := [+|-] term { (+|-) term }
//   term     := factor { '*' factor }
//   factor   := primary [ '^' exponent ]
//   primary  := integer | variable | '(' expr ')'
//   exponent := [+|-] integer | '(' [+|-] integer [ '/' integer ] ')'
//
// A variable (or any product of variables with coefficient 1) takes any
// exponent that stays on the quarter lattice; other bases take only
// non-negative integer exponents.

#include <algorithm>
#include <cctype>
#include <numeric>

#include "holoknot/laurent.hpp"

namespace holoknot {

namespace {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  LaurentPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    LaurentPoly value = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  LaurentPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    LaurentPoly value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  LaurentPoly factor() {
    const std::size_t base_pos = pos_;
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    const std::size_t exp_pos = pos_;
    Fraction f = exponent();
    return raise(base, f, base_pos, exp_pos);
  }

  LaurentPoly primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(ring_, mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!ring_.index_of(name)) {
        throw ParseError("unknown variable '" + name + "' for ring " + ring_.describe(), start);
      }
      return LaurentPoly::variable(ring_, name);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::int64_t small_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    if (pos_ - start > 15) throw ParseError("exponent too large", start);
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t signed_integer() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    const std::int64_t v = small_integer();
    return negative ? -v : v;
  }

  Fraction exponent() {
    if (!accept('(')) return {signed_integer(), 1};
    Fraction f{signed_integer(), 1};
    if (accept('/')) {
      const std::size_t den_pos = pos_;
      f.den = small_integer();
      if (f.den == 0) throw ParseError("zero exponent denominator", den_pos);
    }
    expect(')');
    const std::int64_t g = std::gcd(f.num, f.den);
    if (g > 1) {
      f.num /= g;
      f.den /= g;
    }
    return f;
  }

  LaurentPoly raise(const LaurentPoly& base, Fraction f, std::size_t base_pos, std::size_t exp_pos) {
    if (kExponentDenominator % f.den != 0) {
      throw ParseError("unsupported exponent denominator " + std::to_string(f.den) +
                           " (must divide " + std::to_string(kExponentDenominator) + ")",
                       exp_pos);
    }
    const bool unit_monomial = base.is_monomial() && abs(base.leading().coeff) == 1;
    if (unit_monomial && (f.den == 1 || base.leading().coeff == 1)) {
      const Term& t = base.leading();
      Exponents e;
      for (std::size_t i = 0; i < ring_.arity(); ++i) {
        const std::int64_t scaled = t.exp.quarters[i] * f.num;
        if (scaled % f.den != 0) {
          throw ParseError("power leaves the quarter-exponent lattice", exp_pos);
        }
        e.quarters[i] = scaled / f.den;
      }
      mpz_class c = (t.coeff < 0 && f.num % 2 != 0) ? -1 : 1;
      return LaurentPoly::monomial(ring_, e, c);
    }
    if (f.den != 1 || f.num < 0) {
      throw ParseError("only non-negative integer powers of a non-monomial are supported", base_pos);
    }
    return pow(base, static_cast<std::uint64_t>(f.num));
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Ring& ring, const Exponents& e,
                            const std::vector<std::size_t>& order) {
  std::string out;
  for (std::size_t i : order) {
    const std::int64_t q = e.quarters[i];
    if (q == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[i];
    if (q != kExponentDenominator) out += "^" + render_exponent(q);
  }
  return out;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::string render(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  const Ring& ring = a.ring();
  // Factors inside a monomial appear in alphabetical order of variable name.
  std::vector<std::size_t> order(ring.arity());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return ring.variables()[x] < ring.variables()[y]; });

  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpz_class magnitude = abs(t.coeff);
    const std::string mono = render_monomial(ring, t.exp, order);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace holoknot
