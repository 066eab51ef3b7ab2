#include <doctest.h>

#include "holoknot/qpnum.hpp"
#include "holoknot/torus.hpp"

using namespace holoknot;

namespace {

LaurentPoly QP(const char* text) { return parse_poly(text, qp_ring()); }
LaurentPoly Q(const char* text) { return parse_poly(text, jones_ring()); }

}  // namespace

TEST_CASE("qp_number") {
  CHECK(qp_number(0).is_zero());
  CHECK(qp_number(1) == QP("1"));
  CHECK(qp_number(2) == QP("q + p"));
  CHECK(qp_number(3) == QP("q^2 + q*p + p^2"));
}

TEST_CASE("qp_recurrence_step") {
  CHECK(qp_recurrence_step(qp_number(1), qp_number(0)) == QP("q + p"));
  CHECK(qp_recurrence_step(qp_number(2), qp_number(1)) == QP("q^2 + q*p + p^2"));
  CHECK(qp_recurrence_step(QP("0"), QP("0")).is_zero());
  CHECK_THROWS_AS(qp_recurrence_step(Q("q"), Q("1")), RingMismatch);
}

TEST_CASE("specialize") {
  CHECK(specialize(qp_number(2), QpMode::q3q) == Q("q^3 + q"));
  CHECK(specialize(qp_number(1), QpMode::q3q) == Q("1"));
  CHECK(specialize(qp_number(2), QpMode::q3p) == QP("q^3 + p"));
  // (q^6 - q^2) / (q^3 - q) by long division.
  CHECK(exact_div(Q("q^6 - q^2"), Q("q^3 - q")) == Q("q^3 + q"));
}

TEST_CASE("closed form against the quotient and an integer evaluation") {
  const LaurentPoly q = QP("q");
  const LaurentPoly p = QP("p");
  LaurentPoly prev = qp_number(0);
  LaurentPoly curr = qp_number(1);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const LaurentPoly v = qp_number(n);
    CHECK((q - p) * v == pow(q, n) - pow(p, n));
    CHECK(exact_div(pow(q, n) - pow(p, n), q - p) == v);
    if (n >= 1) {
      CHECK(curr == v);
      LaurentPoly next = qp_recurrence_step(curr, prev);
      prev = curr;
      curr = next;
    }
    if (n <= 60) {
      // [n] at q = 3, p = 2 is 3^n - 2^n.
      mpz_class three, two;
      mpz_ui_pow_ui(three.get_mpz_t(), 3, n);
      mpz_ui_pow_ui(two.get_mpz_t(), 2, n);
      CHECK(eval_rational(v, {{"q", 3}, {"p", 2}}) == mpq_class(three - two));
    }
  }
}

TEST_CASE("specialized recurrences") {
  const LaurentPoly k1 = Q("q + q^3");
  const LaurentPoly k2 = Q("q^4");
  const LaurentPoly g1 = QP("q^3 + p");
  const LaurentPoly g2 = QP("q^3*p");
  for (std::uint64_t n = 1; n < 120; ++n) {
    CHECK(specialize(qp_number(n + 1), QpMode::q3q) ==
          k1 * specialize(qp_number(n), QpMode::q3q) - k2 * specialize(qp_number(n - 1), QpMode::q3q));
    CHECK(specialize(qp_number(n + 1), QpMode::q3p) ==
          g1 * specialize(qp_number(n), QpMode::q3p) - g2 * specialize(qp_number(n - 1), QpMode::q3p));
  }
}

TEST_CASE("q <-> p symmetry") {
  const Ring swapped{"p", "q"};
  for (std::uint64_t n = 0; n < 40; ++n) {
    const LaurentPoly v = qp_number(n);
    const LaurentPoly mirrored = rebase(LaurentPoly(swapped, {v.terms().begin(), v.terms().end()}), qp_ring());
    CHECK(mirrored == v);
  }
}
