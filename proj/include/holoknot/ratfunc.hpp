#pragma once

// Quotients of Laurent polynomials, kept without GCD reduction.
//
// Normal form: the denominator's componentwise-minimal exponent is zero (monomial
// factors live in the numerator) and its lexicographically greatest coefficient is
// positive. Whenever the denominator divides the numerator exactly the value
// collapses to a polynomial with denominator 1. Equality is by cross-multiplication.

#include <map>
#include <string>
#include <string_view>

#include "holoknot/laurent.hpp"

namespace holoknot {

class RationalFn {
 public:
  RationalFn(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly numerator, LaurentPoly denominator);

  // Normalized but without the exact-division attempt.
  static RationalFn unsimplified(LaurentPoly numerator, LaurentPoly denominator);

  const Ring& ring() const noexcept { return num_.ring(); }
  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  // Lossless conversion; DomainError unless is_polynomial().
  const LaurentPoly& as_polynomial() const;

  RationalFn operator-() const;

  // Structural identity of the stored pair. Use rf_equal for value equality.
  friend bool same_representation(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Raw {};
  RationalFn(LaurentPoly numerator, LaurentPoly denominator, Raw);
  void normalize();
  void simplify();

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class RfOp { add, sub, mul, div };

RationalFn rf_arith(RfOp op, const RationalFn& a, const RationalFn& b);
bool rf_equal(const RationalFn& a, const RationalFn& b);

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator-(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const RationalFn& a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);

// "num / den", each side parenthesized when it has more than one term;
// plain polynomial rendering when the denominator is 1.
std::string render(const RationalFn& a);

// Replaces each listed variable by a Laurent polynomial of target_ring; unlisted
// variables move over by name. A replacement that is a monomial with coefficient
// +-1 accepts any quarter exponent; any other replacement needs integer
// exponents on its variable, and negative powers go to the denominator.
RationalFn substitute(const LaurentPoly& a, const std::map<std::string, LaurentPoly>& replacements,
                      const Ring& target_ring);

// Single-variable form; the result lives in replacement.ring().
RationalFn substitute_poly(const LaurentPoly& a, std::string_view var, const LaurentPoly& replacement);

// Applies substitute() to numerator and denominator.
RationalFn substitute(const RationalFn& a, const std::map<std::string, LaurentPoly>& replacements,
                      const Ring& target_ring);

}  // namespace holoknot
