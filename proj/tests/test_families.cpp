#include <doctest.h>

#include "holoknot/families.hpp"
#include "holoknot/torus.hpp"

using namespace holoknot;

namespace {

LaurentPoly P(const char* text, const Ring& ring) { return parse_poly(text, ring); }

}  // namespace

TEST_CASE("presets") {
  const SkeinFamily jones = preset("jones");
  CHECK(jones.ring.describe() == "[q]");
  CHECK(jones.l1 == P("q^(3/2) - q^(1/2)", jones.ring));
  CHECK(jones.l1 == P("q*(q^(1/2) - q^(-1/2))", jones.ring));
  CHECK(jones.l2 == P("q^2", jones.ring));

  const SkeinFamily alexander = preset("alexander");
  CHECK(alexander.ring.describe() == "[t]");
  CHECK(alexander.l2.is_one());
  CHECK(alexander.seed_unlink2.numerator().is_zero());

  const SkeinFamily homfly = preset("homfly");
  CHECK(homfly.ring.describe() == "[a, z]");
  CHECK(homfly.l1 == P("a*z", homfly.ring));
  CHECK(homfly.l2 == P("a^2", homfly.ring));

  const SkeinFamily gjones = preset("gjones");
  CHECK(gjones.ring.describe() == "[q, p]");
  CHECK(gjones.l2 == P("q^(3/2)*p^(1/2)", gjones.ring));

  CHECK_THROWS_AS(preset("kauffman"), DomainError);
}

TEST_CASE("seeds") {
  const SkeinFamily jones = preset("jones");
  REQUIRE(jones.seed_unlink2.is_polynomial());
  CHECK(jones.seed_unlink2.as_polynomial() == P("-q^(1/2) - q^(-1/2)", jones.ring));

  const SkeinFamily gjones = preset("gjones");
  CHECK_FALSE(gjones.seed_unlink2.is_polynomial());
  CHECK(rf_equal(gjones.seed_unlink2,
                 RationalFn(P("1 - q^(3/2)*p^(1/2)", gjones.ring), P("q^(3/2) - p^(1/2)", gjones.ring))));

  const SkeinFamily homfly = preset("homfly");
  CHECK(rf_equal(homfly.seed_unlink2,
                 RationalFn(P("a^-1*z^-1 - a*z^-1", homfly.ring))));

  for (auto name : kPresetNames) {
    const SkeinFamily f = preset(name);
    CHECK(f.seed_p1.is_one());
    CHECK(rf_equal(RationalFn(f.l1) * f.seed_unlink2 + RationalFn(f.l2), RationalFn(LaurentPoly::constant(f.ring, 1))));
  }
  const Ring q{"q"};
  CHECK_THROWS_AS(unlink2_seed(LaurentPoly(q), P("q", q)), DomainError);
}

TEST_CASE("k_from_l") {
  const SkeinFamily jones = preset("jones");
  HolographicMap k = k_from_l(jones);
  CHECK(k.k1 == P("q + q^3", jones.ring));
  CHECK(k.k2 == P("-q^4", jones.ring));

  const SkeinFamily gjones = preset("gjones");
  k = k_from_l(gjones);
  CHECK(k.k1 == P("q^3 + p", gjones.ring));
  CHECK(k.k2 == P("-q^3*p", gjones.ring));

  const SkeinFamily alexander = preset("alexander");
  k = k_from_l(alexander);
  CHECK(k.k1 == P("t + t^-1", alexander.ring));
  CHECK(render(k.k1) == "t^-1 + t");
  CHECK(k.k2 == P("-1", alexander.ring));

  CHECK_THROWS_AS(k_from_l(jones.l1, gjones.l2), RingMismatch);
}

TEST_CASE("l_from_k") {
  const Ring q{"q"};
  SkeinCoefficients l = l_from_k({P("q + q^3", q), P("-q^4", q)});
  CHECK(l.l2 == P("q^2", q));
  CHECK(l.l1 == P("q^(3/2) - q^(1/2)", q));

  const Ring qp{"q", "p"};
  l = l_from_k({P("q^3 + p", qp), P("-q^3*p", qp)});
  CHECK(l.l2 == P("q^(3/2)*p^(1/2)", qp));
  CHECK(l.l1 == P("q^(3/2) - p^(1/2)", qp));

  try {
    l_from_k({P("q + 1", q), P("-q^4", q)});
    FAIL("expected CoefficientInversionError");
  } catch (const CoefficientInversionError& e) {
    CHECK(e.step() == 2);
  }
  try {
    l_from_k({P("q + 1", q), P("q^3", q)});
    FAIL("expected CoefficientInversionError");
  } catch (const CoefficientInversionError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("round trips and seed consistency") {
  for (auto name : kPresetNames) {
    CAPTURE(name);
    const SkeinFamily f = preset(name);
    const HolographicMap k = k_from_l(f);
    const SkeinCoefficients l = l_from_k(k);
    CHECK(l.l1 == f.l1);
    CHECK(l.l2 == f.l2);
    const HolographicMap again = k_from_l(l.l1, l.l2);
    CHECK(again.k1 == k.k1);
    CHECK(again.k2 == k.k2);
    // Step-2 seed k1 + k2 equals the step-1 value at n = 3.
    CHECK(rf_equal(invariant_step1(f, 3), RationalFn(k.k1 + k.k2)));
  }
}
