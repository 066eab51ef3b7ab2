#include "holoknot/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace holoknot {

RationalFn::RationalFn(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(LaurentPoly::constant(num_.ring(), 1)) {}

RationalFn::RationalFn(LaurentPoly numerator, LaurentPoly denominator, Raw)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_ring(num_.ring(), den_.ring());
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFn::RationalFn(LaurentPoly numerator, LaurentPoly denominator)
    : RationalFn(std::move(numerator), std::move(denominator), Raw{}) {
  simplify();
}

RationalFn RationalFn::unsimplified(LaurentPoly numerator, LaurentPoly denominator) {
  return RationalFn(std::move(numerator), std::move(denominator), Raw{});
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.ring(), 1);
    return;
  }
  const Exponents shift = Exponents{} - den_.min_exponents();
  const mpz_class sign = sgn(den_.leading().coeff) < 0 ? -1 : 1;
  if (!shift.is_zero() || sign < 0) {
    num_ = num_.scaled(shift, sign);
    den_ = den_.scaled(shift, sign);
  }
}

void RationalFn::simplify() {
  if (den_.is_one()) return;
  if (auto q = try_exact_div(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly::constant(num_.ring(), 1);
  }
}

const LaurentPoly& RationalFn::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("not a polynomial: " + render(*this));
  return num_;
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Raw{}); }

RationalFn rf_arith(RfOp op, const RationalFn& a, const RationalFn& b) {
  require_same_ring(a.ring(), b.ring());
  const auto& an = a.numerator();
  const auto& ad = a.denominator();
  const auto& bn = b.numerator();
  const auto& bd = b.denominator();
  switch (op) {
    case RfOp::add:
      if (ad == bd) return RationalFn(an + bn, ad);
      return RationalFn(an * bd + bn * ad, ad * bd);
    case RfOp::sub:
      if (ad == bd) return RationalFn(an - bn, ad);
      return RationalFn(an * bd - bn * ad, ad * bd);
    case RfOp::mul:
      return RationalFn(an * bn, ad * bd);
    case RfOp::div:
      if (b.is_zero()) throw DomainError("division by the zero rational function");
      return RationalFn(an * bd, ad * bn);
  }
  throw DomainError("unknown rational operation");
}

bool rf_equal(const RationalFn& a, const RationalFn& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.denominator() == b.denominator()) return a.numerator() == b.numerator();
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) { return rf_arith(RfOp::add, a, b); }
RationalFn operator-(const RationalFn& a, const RationalFn& b) { return rf_arith(RfOp::sub, a, b); }
RationalFn operator*(const RationalFn& a, const RationalFn& b) { return rf_arith(RfOp::mul, a, b); }
RationalFn operator/(const RationalFn& a, const RationalFn& b) { return rf_arith(RfOp::div, a, b); }

std::string render(const RationalFn& a) {
  if (a.is_polynomial()) return render(a.numerator());
  auto side = [](const LaurentPoly& p) {
    return p.size() > 1 ? "(" + render(p) + ")" : render(p);
  };
  return side(a.numerator()) + " / " + side(a.denominator());
}

RationalFn substitute(const LaurentPoly& a, const std::map<std::string, LaurentPoly>& replacements,
                      const Ring& target_ring) {
  const Ring& src = a.ring();
  const std::size_t n = src.arity();

  // Per source variable: a unit monomial replacement (sign, exponents), a polynomial
  // replacement, or a by-name move into the target ring.
  struct Slot {
    const LaurentPoly* poly = nullptr;
    int sign = 1;
    std::optional<Exponents> unit;
    std::optional<std::size_t> target_index;
  };
  std::vector<Slot> slots(n);
  for (const auto& [name, rep] : replacements) {
    auto idx = src.index_of(name);
    if (!idx) throw SubstitutionError("unknown variable '" + name + "' in ring " + src.describe());
    require_same_ring(rep.ring(), target_ring);
    Slot& s = slots[*idx];
    if (rep.is_monomial() && abs(rep.leading().coeff) == 1) {
      s.unit = rep.leading().exp;
      s.sign = sgn(rep.leading().coeff);
    } else {
      s.poly = &rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!slots[i].unit && !slots[i].poly) slots[i].target_index = target_ring.index_of(src.variables()[i]);
  }

  // Group terms by the whole-unit powers of the polynomial replacements; each group
  // is multiplied by the matching replacement powers once.
  std::map<std::vector<std::int64_t>, std::vector<Term>> groups;
  std::vector<std::int64_t> lowest(n, 0);
  for (const auto& t : a.terms()) {
    std::vector<std::int64_t> key(n, 0);
    Term nt{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t e = t.exp.quarters[i];
      if (e == 0) continue;
      const Slot& s = slots[i];
      const std::string& name = src.variables()[i];
      if (s.poly) {
        if (e % kExponentDenominator != 0) {
          throw SubstitutionError("cannot substitute a polynomial into " + name + "^" +
                                  render_exponent(e));
        }
        key[i] = e / kExponentDenominator;
        lowest[i] = std::min(lowest[i], key[i]);
      } else if (s.unit) {
        for (std::size_t j = 0; j < target_ring.arity(); ++j) {
          const std::int64_t scaled = s.unit->quarters[j] * e;
          if (scaled % kExponentDenominator != 0) {
            throw SubstitutionError("substituting into " + name + "^" + render_exponent(e) +
                                    " leaves the quarter-exponent lattice");
          }
          nt.exp.quarters[j] += scaled / kExponentDenominator;
        }
        if (s.sign < 0) {
          if (e % kExponentDenominator != 0) {
            throw SubstitutionError("negative sign raised to fractional power " + render_exponent(e));
          }
          if ((e / kExponentDenominator) % 2 != 0) nt.coeff = -nt.coeff;
        }
      } else {
        if (!s.target_index) {
          throw SubstitutionError("variable '" + name + "' has no place in ring " + target_ring.describe());
        }
        nt.exp.quarters[*s.target_index] += e;
      }
    }
    groups[key].push_back(std::move(nt));
  }

  // powers[i][k] = replacement_i^k, grown one factor at a time.
  std::vector<std::vector<LaurentPoly>> powers(n);
  auto power = [&](std::size_t i, std::int64_t k) -> const LaurentPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(LaurentPoly::constant(target_ring, 1));
    while (static_cast<std::int64_t>(cache.size()) <= k) cache.push_back(cache.back() * *slots[i].poly);
    return cache[static_cast<std::size_t>(k)];
  };

  LaurentPoly den = LaurentPoly::constant(target_ring, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i].poly && lowest[i] < 0) den = den * power(i, -lowest[i]);
  }
  LaurentPoly num(target_ring);
  for (auto& [key, terms] : groups) {
    LaurentPoly part(target_ring, std::move(terms));
    for (std::size_t i = 0; i < n; ++i) {
      if (slots[i].poly) part = part * power(i, key[i] - lowest[i]);
    }
    num += part;
  }
  return RationalFn(std::move(num), std::move(den));
}

RationalFn substitute_poly(const LaurentPoly& a, std::string_view var, const LaurentPoly& replacement) {
  return substitute(a, {{std::string(var), replacement}}, replacement.ring());
}

RationalFn substitute(const RationalFn& a, const std::map<std::string, LaurentPoly>& replacements,
                      const Ring& target_ring) {
  if (a.is_polynomial()) return substitute(a.numerator(), replacements, target_ring);
  return substitute(a.numerator(), replacements, target_ring) /
         substitute(a.denominator(), replacements, target_ring);
}

}  // namespace holoknot
