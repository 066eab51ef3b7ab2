#pragma once

// Test-only reference arithmetic, deliberately naive and independent of the
// library: polynomials are std::map from (quarter-unit) exponent pairs to
// integers, multiplied by schoolbook convolution.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "holoknot/laurent.hpp"

namespace oracle {

using Key = std::pair<std::int64_t, std::int64_t>;  // quarter units of (x, y)
using Poly = std::map<Key, mpz_class>;

inline void clean(Poly& p) {
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0) {
      it = p.erase(it);
    } else {
      ++it;
    }
  }
}

inline Poly add(Poly a, const Poly& b, int sign = 1) {
  for (const auto& [k, c] : b) a[k] += sign * c;
  clean(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  }
  clean(out);
  return out;
}

inline Poly power(const Poly& a, int k) {
  Poly out{{{0, 0}, 1}};
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

inline holoknot::LaurentPoly to_laurent(const Poly& p, const holoknot::Ring& ring) {
  std::vector<holoknot::Term> terms;
  for (const auto& [k, c] : p) {
    holoknot::Term t;
    t.exp.quarters[0] = k.first;
    if (ring.arity() > 1) t.exp.quarters[1] = k.second;
    t.coeff = c;
    terms.push_back(t);
  }
  return holoknot::LaurentPoly(ring, std::move(terms));
}

// x^(num/den) for rational x, den in {1, 2, 4}; the test points are chosen to be perfect powers.
inline mpq_class eval_power(const mpq_class& x, std::int64_t quarters) {
  mpz_class n = x.get_num();
  mpz_class d = x.get_den();
  std::int64_t e = quarters;
  std::int64_t root = 4;
  while (root > 1 && e % 2 == 0) {
    e /= 2;
    root /= 2;
  }
  if (root > 1) {
    mpz_root(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(root));
    mpz_root(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(root));
  }
  mpq_class base(n, d);
  mpq_class out = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return e < 0 ? mpq_class(1 / out) : out;
}

inline mpq_class eval(const Poly& p, const mpq_class& x, const mpq_class& y) {
  mpq_class total = 0;
  for (const auto& [k, c] : p) total += c * eval_power(x, k.first) * eval_power(y, k.second);
  return total;
}

}  // namespace oracle
