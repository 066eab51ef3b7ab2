#include "holoknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

namespace holoknot {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Remainder store for division-like algorithms: greatest exponent first.
using TermMap = std::map<Exponents, mpz_class, std::greater<>>;

TermMap to_map(const LaurentPoly& a) {
  TermMap m;
  for (const auto& t : a.terms()) m.emplace(t.exp, t.coeff);
  return m;
}

LaurentPoly from_map(const Ring& ring, const TermMap& m) {
  std::vector<Term> terms;
  terms.reserve(m.size());
  for (const auto& [e, c] : m) terms.push_back({e, c});
  return LaurentPoly(ring, std::move(terms));
}

// m -= c * x^shift * b
void subtract_scaled(TermMap& m, const LaurentPoly& b, const Exponents& shift,
                     const mpz_class& c) {
  for (const auto& t : b.terms()) {
    auto key = t.exp + shift;
    auto [it, inserted] = m.try_emplace(key, 0);
    it->second -= c * t.coeff;
    if (sgn(it->second) == 0) m.erase(it);
  }
}

bool within(const Exponents& e, const Exponents& lo, const Exponents& hi, std::size_t arity) {
  for (std::size_t i = 0; i < arity; ++i) {
    if (e.quarters[i] < lo.quarters[i] || e.quarters[i] > hi.quarters[i]) return false;
  }
  return true;
}

}  // namespace

Ring::Ring(std::initializer_list<std::string> variables)
    : Ring(std::vector<std::string>(variables)) {}

Ring::Ring(std::vector<std::string> variables) {
  if (variables.empty() || variables.size() > kMaxVariables) {
    throw DomainError("a ring needs between 1 and " + std::to_string(kMaxVariables) +
                      " variables, got " + std::to_string(variables.size()));
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!valid_identifier(variables[i])) {
      throw DomainError("invalid variable name '" + variables[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) {
        throw DomainError("duplicate variable name '" + variables[i] + "'");
      }
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::describe() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (i) out += ", ";
    out += (*vars_)[i];
  }
  return out + "]";
}

Exponents whole_units(std::initializer_list<std::int64_t> exponents) {
  Exponents e;
  std::size_t i = 0;
  for (auto v : exponents) {
    if (i >= kMaxVariables) throw DomainError("too many exponents");
    e.quarters[i++] = v * kExponentDenominator;
  }
  return e;
}

LaurentPoly::LaurentPoly(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    for (std::size_t i = ring_.arity(); i < kMaxVariables; ++i) {
      if (t.exp.quarters[i] != 0) {
        throw DomainError("exponent vector longer than ring " + ring_.describe());
      }
    }
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

LaurentPoly LaurentPoly::constant(Ring ring, const mpz_class& c) {
  return monomial(std::move(ring), Exponents{}, c);
}

LaurentPoly LaurentPoly::monomial(Ring ring, const Exponents& exp, const mpz_class& c) {
  std::vector<Term> terms;
  terms.push_back({exp, c});
  return LaurentPoly(std::move(ring), std::move(terms));
}

LaurentPoly LaurentPoly::variable(Ring ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "' in ring " + ring.describe());
  Exponents e;
  e.quarters[*idx] = kExponentDenominator;
  return monomial(std::move(ring), e);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp.is_zero() && terms_[0].coeff == 1;
}

const Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.back();
}

const Term& LaurentPoly::trailing() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no trailing term");
  return terms_.front();
}

Exponents LaurentPoly::min_exponents() const {
  Exponents out = leading().exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      out.quarters[i] = std::min(out.quarters[i], t.exp.quarters[i]);
    }
  }
  return out;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents out = leading().exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      out.quarters[i] = std::max(out.quarters[i], t.exp.quarters[i]);
    }
  }
  return out;
}

mpz_class LaurentPoly::coefficient(const Exponents& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponents& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return LaurentPoly(ring_, std::move(terms), Sorted{});
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_ring(ring_, o.ring_);
  if (&o == this) return *this = scaled(Exponents{}, 2);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->exp < j->exp)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exp < i->exp) {
      merged.push_back(*j++);
    } else {
      mpz_class c = i->coeff + j->coeff;
      if (sgn(c) != 0) merged.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Exponents& shift, const mpz_class& c) const {
  if (sgn(c) == 0) return LaurentPoly(ring_);
  auto terms = terms_;
  for (auto& t : terms) {
    t.exp += shift;
    t.coeff *= c;
  }
  return LaurentPoly(ring_, std::move(terms), Sorted{});
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring_);
  if (a.is_monomial()) return b.scaled(a.terms_[0].exp, a.terms_[0].coeff);
  if (b.is_monomial()) return a.scaled(b.terms_[0].exp, b.terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.exp + t.exp, s.coeff * t.coeff});
  }
  return LaurentPoly(a.ring_, std::move(products));
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch(a.describe(), b.describe());
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& a, std::uint64_t k) {
  LaurentPoly result = LaurentPoly::constant(a.ring(), 1);
  LaurentPoly base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Ring& ring = a.ring();
  if (a.is_zero()) return LaurentPoly(ring);

  // Every quotient exponent lies in this box: per-variable degrees add under
  // multiplication, at both the low and the high end.
  const Exponents lo = a.min_exponents() - b.min_exponents();
  const Exponents hi = a.max_exponents() - b.max_exponents();
  const Term& lead = b.leading();

  TermMap rem = to_map(a);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto& [e, c] = *rem.begin();
    Exponents qexp = e - lead.exp;
    if (!within(qexp, lo, hi, ring.arity()) || !mpz_divisible_p(c.get_mpz_t(), lead.coeff.get_mpz_t())) {
      LaurentPoly r = from_map(ring, rem);
      throw InexactDivision("division is not exact: " + render(a) + " by " + render(b) +
                                " leaves remainder " + render(r),
                            std::move(r));
    }
    mpz_class qc = c / lead.coeff;
    subtract_scaled(rem, b, qexp, qc);
    quotient.push_back({qexp, std::move(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly(ring, std::move(quotient));
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  try {
    return exact_div(a, b);
  } catch (const InexactDivision&) {
    return std::nullopt;
  }
}

LaurentPoly sqrt_perfect(const LaurentPoly& a) {
  const Ring& ring = a.ring();
  if (a.is_zero()) return LaurentPoly(ring);
  auto fail = [&](const std::string& why) {
    return NotPerfectSquare(render(a) + " is not a perfect square: " + why);
  };

  const Exponents amin = a.min_exponents();
  const Exponents amax = a.max_exponents();
  Exponents lo, hi;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (amin.quarters[i] % 2 != 0 || amax.quarters[i] % 2 != 0) {
      throw fail("extreme degree in " + ring.variables()[i] + " is odd");
    }
    lo.quarters[i] = amin.quarters[i] / 2;
    hi.quarters[i] = amax.quarters[i] / 2;
  }

  const Term& top = a.leading();
  if (sgn(top.coeff) <= 0 || !mpz_perfect_square_p(top.coeff.get_mpz_t())) {
    throw fail("leading coefficient is not a positive square");
  }
  Term root_lead{Exponents{}, sqrt(top.coeff)};
  for (std::size_t i = 0; i < ring.arity(); ++i) root_lead.exp.quarters[i] = top.exp.quarters[i] / 2;
  const mpz_class twice_lead = 2 * root_lead.coeff;

  // Invariant: rem == a - root^2, root's terms found in descending order.
  std::vector<Term> root{root_lead};
  TermMap rem = to_map(a);
  rem.erase(top.exp);
  while (!rem.empty()) {
    const auto& [e, c] = *rem.begin();
    Exponents texp = e - root_lead.exp;
    if (!within(texp, lo, hi, ring.arity()) ||
        !mpz_divisible_p(c.get_mpz_t(), twice_lead.get_mpz_t())) {
      throw fail("remainder " + render(from_map(ring, rem)) + " cannot be absorbed");
    }
    mpz_class tc = c / twice_lead;
    for (const auto& r : root) {
      auto key = r.exp + texp;
      auto [it, inserted] = rem.try_emplace(key, 0);
      it->second -= 2 * tc * r.coeff;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    auto [it, inserted] = rem.try_emplace(texp + texp, 0);
    it->second -= tc * tc;
    if (sgn(it->second) == 0) rem.erase(it);
    root.push_back({texp, std::move(tc)});
  }
  return LaurentPoly(ring, std::move(root));
}

LaurentPoly substitute_monomial(const LaurentPoly& a, std::string_view var, int sign,
                                const Exponents& target_exponents, const Ring& target_ring) {
  if (sign != 1 && sign != -1) throw SubstitutionError("substitution sign must be +1 or -1");
  const Ring& src = a.ring();
  auto var_idx = src.index_of(var);
  if (!var_idx) {
    throw SubstitutionError("unknown variable '" + std::string(var) + "' in ring " + src.describe());
  }
  for (std::size_t i = target_ring.arity(); i < kMaxVariables; ++i) {
    if (target_exponents.quarters[i] != 0) {
      throw SubstitutionError("target exponents longer than ring " + target_ring.describe());
    }
  }
  // Positions of the untouched variables inside the target ring.
  std::vector<std::optional<std::size_t>> moved(src.arity());
  for (std::size_t i = 0; i < src.arity(); ++i) {
    if (i != *var_idx) moved[i] = target_ring.index_of(src.variables()[i]);
  }

  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    const std::int64_t e = t.exp.quarters[*var_idx];
    Term nt{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (i == *var_idx || t.exp.quarters[i] == 0) continue;
      if (!moved[i]) {
        throw SubstitutionError("variable '" + src.variables()[i] + "' has no place in ring " +
                                target_ring.describe());
      }
      nt.exp.quarters[*moved[i]] += t.exp.quarters[i];
    }
    for (std::size_t i = 0; i < target_ring.arity(); ++i) {
      const std::int64_t scaled = target_exponents.quarters[i] * e;
      if (scaled % kExponentDenominator != 0) {
        throw SubstitutionError("substituting into " + std::string(var) + "^" + render_exponent(e) +
                                " leaves the quarter-exponent lattice");
      }
      nt.exp.quarters[i] += scaled / kExponentDenominator;
    }
    if (sign < 0) {
      if (e % kExponentDenominator != 0) {
        throw SubstitutionError("negative sign raised to fractional power " + render_exponent(e));
      }
      if ((e / kExponentDenominator) % 2 != 0) nt.coeff = -nt.coeff;
    }
    out.push_back(std::move(nt));
  }
  return LaurentPoly(target_ring, std::move(out));
}

LaurentPoly rebase(const LaurentPoly& a, const Ring& target_ring) {
  if (a.ring() == target_ring) return a;
  const Ring& src = a.ring();
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Term nt{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (t.exp.quarters[i] == 0) continue;
      auto idx = target_ring.index_of(src.variables()[i]);
      if (!idx) {
        throw SubstitutionError("variable '" + src.variables()[i] + "' has no place in ring " +
                                target_ring.describe());
      }
      nt.exp.quarters[*idx] += t.exp.quarters[i];
    }
    out.push_back(std::move(nt));
  }
  return LaurentPoly(target_ring, std::move(out));
}

namespace {

// x^(quarters/4) when it is rational.
mpq_class rational_power(const mpq_class& x, std::int64_t quarters, const std::string& name) {
  std::int64_t num = quarters;
  std::int64_t den = kExponentDenominator;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  mpq_class base = x;
  if (den > 1) {
    if (sgn(x) < 0) {
      throw EvaluationError("even root of negative value assigned to " + name);
    }
    mpz_class rn, rd;
    const bool exact_n = mpz_root(rn.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(den)) != 0;
    const bool exact_d = mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(den)) != 0;
    if (!exact_n || !exact_d) {
      throw EvaluationError("irrational power " + name + "^" + render_exponent(quarters));
    }
    base = mpq_class(rn, rd);
  }
  const bool invert = num < 0;
  const auto k = static_cast<unsigned long>(invert ? -num : num);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), base.get_den_mpz_t(), k);
  mpq_class r = invert ? mpq_class(pd, pn) : mpq_class(pn, pd);
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class eval_rational(const LaurentPoly& a, const std::map<std::string, mpq_class>& assignment) {
  const Ring& ring = a.ring();
  mpq_class total = 0;
  for (const auto& t : a.terms()) {
    mpq_class value = t.coeff;
    for (std::size_t i = 0; i < ring.arity(); ++i) {
      const std::int64_t e = t.exp.quarters[i];
      if (e == 0) continue;
      const auto& name = ring.variables()[i];
      auto it = assignment.find(name);
      if (it == assignment.end()) throw EvaluationError("no value assigned to " + name);
      if (sgn(it->second) == 0) {
        if (e < 0) throw EvaluationError("negative power of " + name + " at zero");
        value = 0;
        break;
      }
      value *= rational_power(it->second, e, name);
    }
    total += value;
  }
  return total;
}

std::string render_exponent(std::int64_t quarters) {
  if (quarters % kExponentDenominator == 0) return std::to_string(quarters / kExponentDenominator);
  std::int64_t num = quarters;
  std::int64_t den = kExponentDenominator;
  while (num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace holoknot
