#include "holoknot/families.hpp"

#include "holoknot/qpnum.hpp"

namespace holoknot {

SkeinFamily preset(std::string_view name) {
  if (name == "alexander") {
    Ring t{"t"};
    return make_family("alexander", parse_poly("t^(1/2) - t^(-1/2)", t), parse_poly("1", t));
  }
  if (name == "jones") {
    Ring q{"q"};
    return make_family("jones", parse_poly("q^(3/2) - q^(1/2)", q), parse_poly("q^2", q));
  }
  if (name == "homfly") {
    Ring az{"a", "z"};
    return make_family("homfly", parse_poly("a*z", az), parse_poly("a^2", az));
  }
  if (name == "gjones") {
    const Ring& qp = qp_ring();
    return make_family("gjones", parse_poly("q^(3/2) - p^(1/2)", qp),
                       parse_poly("q^(3/2)*p^(1/2)", qp));
  }
  throw DomainError("unknown family '" + std::string(name) +
                    "' (expected alexander, jones, homfly or gjones)");
}

SkeinFamily make_family(std::string name, LaurentPoly l1, LaurentPoly l2) {
  require_same_ring(l1.ring(), l2.ring());
  Ring ring = l1.ring();
  RationalFn seed = unlink2_seed(l1, l2);
  LaurentPoly one = LaurentPoly::constant(ring, 1);
  return SkeinFamily{std::move(name), std::move(ring), std::move(l1), std::move(l2),
                     std::move(one), std::move(seed)};
}

HolographicMap k_from_l(const LaurentPoly& l1, const LaurentPoly& l2) {
  require_same_ring(l1.ring(), l2.ring());
  return {l1 * l1 + l2.scaled(Exponents{}, 2), -(l2 * l2)};
}

SkeinCoefficients l_from_k(const HolographicMap& k) {
  require_same_ring(k.k1.ring(), k.k2.ring());
  LaurentPoly l2(k.k2.ring());
  try {
    l2 = sqrt_perfect(-k.k2);
  } catch (const NotPerfectSquare& e) {
    throw CoefficientInversionError(1, std::string("cannot recover l2 from -k2: ") + e.what());
  }
  try {
    LaurentPoly l1 = sqrt_perfect(k.k1 - l2.scaled(Exponents{}, 2));
    return {std::move(l1), std::move(l2)};
  } catch (const NotPerfectSquare& e) {
    throw CoefficientInversionError(2, std::string("cannot recover l1 from k1 - 2*l2: ") + e.what());
  }
}

RationalFn unlink2_seed(const LaurentPoly& l1, const LaurentPoly& l2) {
  require_same_ring(l1.ring(), l2.ring());
  if (l1.is_zero()) throw DomainError("unlink seed needs a nonzero l1");
  return RationalFn(LaurentPoly::constant(l1.ring(), 1) - l2, l1);
}

}  // namespace holoknot
