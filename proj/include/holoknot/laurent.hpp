#pragma once

// Exact sparse Laurent polynomials over Z in one or two variables.
//
// Exponents are stored as signed integer counts of quarter units, so q^(3/2)
// is held as the exponent 6. Terms are kept sorted ascending lexicographically
// by exponent vector (ring variable order) and never carry a zero coefficient,
// which makes the representation canonical: equality is term-list equality.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "holoknot/errors.hpp"

namespace holoknot {

inline constexpr std::int64_t kExponentDenominator = 4;
inline constexpr std::size_t kMaxVariables = 2;

// Ordered, distinct variable names. Cheap to copy; the name list is shared.
class Ring {
 public:
  Ring(std::initializer_list<std::string> variables);
  explicit Ring(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return *vars_; }
  std::size_t arity() const noexcept { return vars_->size(); }
  std::int64_t exponent_denominator() const noexcept { return kExponentDenominator; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

// Per-variable exponents in quarter units. Slots beyond the ring arity stay 0.
struct Exponents {
  std::array<std::int64_t, kMaxVariables> quarters{};

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  friend bool operator==(const Exponents&, const Exponents&) = default;

  Exponents& operator+=(const Exponents& o) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) quarters[i] += o.quarters[i];
    return *this;
  }
  Exponents& operator-=(const Exponents& o) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) quarters[i] -= o.quarters[i];
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) { return a -= b; }

  bool is_zero() const { return *this == Exponents{}; }
};

// Builds an exponent vector from whole-unit values, e.g. whole_units({3, 0}) for q^3.
Exponents whole_units(std::initializer_list<std::int64_t> exponents);

struct Term {
  Exponents exp;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

class LaurentPoly {
 public:
  explicit LaurentPoly(Ring ring) : ring_(std::move(ring)) {}
  // Terms in any order; duplicates are merged and zeros dropped.
  LaurentPoly(Ring ring, std::vector<Term> terms);

  static LaurentPoly constant(Ring ring, const mpz_class& c);
  static LaurentPoly monomial(Ring ring, const Exponents& exp, const mpz_class& c = 1);
  static LaurentPoly variable(Ring ring, std::string_view name);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Lexicographically greatest / least term. Precondition: nonzero.
  const Term& leading() const;
  const Term& trailing() const;
  // Componentwise minimum / maximum exponent over all terms. Precondition: nonzero.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  mpz_class coefficient(const Exponents& exp) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Multiplies by c * x^shift without re-sorting (monomial multiplication preserves order).
  LaurentPoly scaled(const Exponents& shift, const mpz_class& c) const;

 private:
  struct Sorted {};
  LaurentPoly(Ring ring, std::vector<Term> sorted_terms, Sorted)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

// Thrown when a division leaves a nonzero remainder. The remainder is
// the one reached when the quotient search stopped.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& message, LaurentPoly remainder)
      : Error(message), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const noexcept { return remainder_; }

 private:
  LaurentPoly remainder_;
};

void require_same_ring(const Ring& a, const Ring& b);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, std::uint64_t k);

// c with b*c == a, or InexactDivision. DomainError when b is zero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// r with r*r == a and a positive coefficient on r's lexicographically greatest term.
LaurentPoly sqrt_perfect(const LaurentPoly& a);

// Replaces var by sign * (target monomial), keeping the remaining variables by name.
// The output lives in target_ring, which must contain every other variable of a.
LaurentPoly substitute_monomial(const LaurentPoly& a, std::string_view var, int sign,
                                const Exponents& target_exponents, const Ring& target_ring);

// Moves a into target_ring, matching variables by name. Every variable of a's ring
// that carries a nonzero exponent must exist in target_ring.
LaurentPoly rebase(const LaurentPoly& a, const Ring& target_ring);

mpq_class eval_rational(const LaurentPoly& a, const std::map<std::string, mpq_class>& assignment);

LaurentPoly parse_poly(std::string_view text, const Ring& ring);
std::string render(const LaurentPoly& a);
// Exponent in quarter units as it appears after '^': "3", "-1", "(3/2)", "(-1/4)".
std::string render_exponent(std::int64_t quarters);

}  // namespace holoknot
