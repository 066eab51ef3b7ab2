#include <doctest.h>

#include "holoknot/qpnum.hpp"
#include "holoknot/torus.hpp"
#include "oracle.hpp"

using namespace holoknot;

namespace {

LaurentPoly J(const char* text) { return parse_poly(text, jones_ring()); }
LaurentPoly G(const char* text) { return parse_poly(text, qp_ring()); }
LaurentPoly H(const char* text) { return parse_poly(text, homfly_ring()); }

// Jones of T(2m+1, 2) from the step-2 recurrence over the naive oracle
// arithmetic; quarter units on the first coordinate.
oracle::Poly oracle_jones_knot(int m) {
  const oracle::Poly k1{{{4, 0}, 1}, {{12, 0}, 1}};
  const oracle::Poly minus_k2{{{16, 0}, 1}};
  oracle::Poly prev{{{0, 0}, 1}};
  oracle::Poly curr = oracle::add(k1, minus_k2, -1);
  if (m == 0) return prev;
  for (int i = 1; i < m; ++i) {
    oracle::Poly next = oracle::add(oracle::mul(k1, curr), oracle::mul(minus_k2, prev), -1);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

TEST_CASE("step-1 invariants") {
  const SkeinFamily jones = preset("jones");
  CHECK(invariant_step1(jones, 3).as_polynomial() == J("q + q^3 - q^4"));
  CHECK(invariant_step1(jones, 2).as_polynomial() == J("-q^(1/2) - q^(5/2)"));
  CHECK(invariant_step1(jones, 1).as_polynomial().is_one());
  CHECK(invariant_step1(jones, 0).as_polynomial() == J("-q^(1/2) - q^(-1/2)"));
  CHECK(render(invariant_step1(jones, 2)) == "-q^(1/2) - q^(5/2)");

  const SkeinFamily alexander = preset("alexander");
  CHECK(render(invariant_step1(alexander, 3)) == "t^-1 - 1 + t");
  CHECK(invariant_step1(alexander, 0).numerator().is_zero());

  const SkeinFamily homfly = preset("homfly");
  CHECK(invariant_step1(homfly, 3).as_polynomial() == H("a^2*z^2 + 2*a^2 - a^4"));
  CHECK(invariant_step1(homfly, 2).as_polynomial() == H("a*z + a*z^-1 - a^3*z^-1"));

  const auto seq = step1_sequence(jones, 5);
  REQUIRE(seq.size() == 6);
  for (std::uint64_t n = 0; n <= 5; ++n) CHECK(same_representation(seq[n], invariant_step1(jones, n)));
}

TEST_CASE("step-2 knots") {
  const SkeinFamily jones = preset("jones");
  CHECK(invariant_step2_knot(jones, 0).is_one());
  CHECK(invariant_step2_knot(jones, 1) == J("q + q^3 - q^4"));
  CHECK(invariant_step2_knot(jones, 2) == J("q^2 + q^4 - q^5 + q^6 - q^7"));
  for (int m = 0; m <= 25; ++m) {
    CHECK(invariant_step2_knot(jones, m) == oracle::to_laurent(oracle_jones_knot(m), jones_ring()));
  }
  const auto seq = step2_knot_sequence(k_from_l(jones), 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[2] == J("q^2 + q^4 - q^5 + q^6 - q^7"));
}

TEST_CASE("closed form and qp form") {
  CHECK(jones_closed_form(3, 2) == J("q + q^3 - q^4"));
  CHECK(jones_closed_form(1, 2).is_one());
  CHECK(jones_closed_form(5, 2) == J("q^2 + q^4 - q^5 + q^6 - q^7"));
  // Right-handed trefoil again as T(2, 3).
  CHECK(jones_closed_form(2, 3) == J("q + q^3 - q^4"));
  CHECK_THROWS_AS(jones_closed_form(2, 2), InexactDivision);

  CHECK(jones_qp_form(0).is_one());
  CHECK(jones_qp_form(1) == J("q + q^3 - q^4"));
  CHECK(jones_qp_form(2) == J("q^2 + q^4 - q^5 + q^6 - q^7"));
}

TEST_CASE("generalized Jones") {
  CHECK(gjones_knot(0).is_one());
  CHECK(gjones_knot(1) == G("q^3 + p - q^3*p"));
  CHECK(reduce_to_jones(gjones_knot(1)) == J("q + q^3 - q^4"));
  CHECK(gjones_recurrence(1).as_polynomial().is_one());
  CHECK(gjones_recurrence(3).as_polynomial() == G("q^3 + p - q^3*p"));
  const RationalFn hopf = gjones_recurrence(2);
  CHECK_FALSE(hopf.is_polynomial());
  CHECK(hopf.denominator() == G("q^(3/2) - p^(1/2)"));
  CHECK(reduce_to_jones(G("1")).is_one());
}

TEST_CASE("HOMFLY bridge") {
  CHECK(homfly_to_gjones(H("a^2*z^2 + 2*a^2 - a^4")).as_polynomial() == G("q^3 + p - q^3*p"));
  CHECK(homfly_to_gjones(H("1")).as_polynomial().is_one());
  CHECK(homfly_to_gjones(H("a^2")).as_polynomial() == G("q^(3/2)*p^(1/2)"));
  CHECK_THROWS_AS(homfly_to_gjones(J("q")), RingMismatch);
  const RationalFn hopf = homfly_to_gjones(invariant_step1(preset("homfly"), 2));
  CHECK(rf_equal(hopf, gjones_recurrence(2)));
  CHECK(rf_equal(reduce_to_jones(hopf), invariant_step1(preset("jones"), 2)));
}

TEST_CASE("structural properties") {
  const SkeinFamily jones = preset("jones");
  const SkeinFamily homfly = preset("homfly");
  const auto jseq = step1_sequence(jones, 120);
  const auto hseq = step1_sequence(homfly, 80);
  for (std::uint64_t n = 0; n < jseq.size(); ++n) {
    CAPTURE(n);
    REQUIRE(jseq[n].is_polynomial());
    const LaurentPoly v = jseq[n].as_polynomial();
    CHECK(eval_rational(v, {{"q", 1}}) == (n % 2 == 1 ? 1 : -2));
    if (n % 2 == 1 && n >= 3) {
      CHECK(v.min_exponents().quarters[0] == static_cast<std::int64_t>(2 * (n - 1)));
      CHECK(v.max_exponents().quarters[0] == static_cast<std::int64_t>(2 * (3 * n - 1)));
      CHECK(v == jones_closed_form(n, 2));
    }
  }
  for (std::uint64_t n = 0; n < hseq.size(); ++n) {
    CAPTURE(n);
    REQUIRE(hseq[n].is_polynomial());
    for (const Term& t : hseq[n].as_polynomial().terms()) {
      const std::int64_t z = t.exp.quarters[1];
      CHECK(z % 4 == 0);
      CHECK(((z / 4) % 2 != 0) == (n % 2 == 0));
    }
  }
}
