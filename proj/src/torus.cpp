#include "holoknot/torus.hpp"

#include "holoknot/qpnum.hpp"

namespace holoknot {

const Ring& jones_ring() {
  static const Ring ring{"q"};
  return ring;
}

const Ring& homfly_ring() {
  static const Ring ring{"a", "z"};
  return ring;
}

std::vector<RationalFn> step1_sequence(const SkeinFamily& family, std::uint64_t n_max) {
  std::vector<RationalFn> seq;
  seq.reserve(n_max + 1);
  seq.push_back(family.seed_unlink2);
  if (n_max == 0) return seq;
  seq.emplace_back(family.seed_p1);
  const RationalFn l1(family.l1);
  const RationalFn l2(family.l2);
  for (std::uint64_t j = 1; j < n_max; ++j) {
    seq.push_back(l1 * seq[j] + l2 * seq[j - 1]);
  }
  return seq;
}

RationalFn invariant_step1(const SkeinFamily& family, std::uint64_t n) {
  if (n == 0) return family.seed_unlink2;
  // Sliding pair (P_{j-1}, P_j).
  RationalFn prev = family.seed_unlink2;
  RationalFn curr(family.seed_p1);
  const RationalFn l1(family.l1);
  const RationalFn l2(family.l2);
  for (std::uint64_t j = 1; j < n; ++j) {
    RationalFn next = l1 * curr + l2 * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

std::vector<LaurentPoly> step2_knot_sequence(const HolographicMap& k, std::uint64_t m_max) {
  require_same_ring(k.k1.ring(), k.k2.ring());
  std::vector<LaurentPoly> seq;
  seq.reserve(m_max + 1);
  seq.push_back(LaurentPoly::constant(k.k1.ring(), 1));
  if (m_max == 0) return seq;
  seq.push_back(k.k1 + k.k2);
  for (std::uint64_t m = 2; m <= m_max; ++m) {
    seq.push_back(k.k1 * seq[m - 1] + k.k2 * seq[m - 2]);
  }
  return seq;
}

LaurentPoly invariant_step2_knot(const HolographicMap& k, std::uint64_t m) {
  return step2_knot_sequence(k, m).back();
}

LaurentPoly invariant_step2_knot(const SkeinFamily& family, std::uint64_t m) {
  return invariant_step2_knot(k_from_l(family), m);
}

LaurentPoly jones_closed_form(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw DomainError("closed form needs positive n and k");
  const Ring& ring = jones_ring();
  const auto ni = static_cast<std::int64_t>(n);
  const auto ki = static_cast<std::int64_t>(k);
  LaurentPoly numerator(ring, {{whole_units({0}), 1},
                               {whole_units({ni + 1}), -1},
                               {whole_units({ki + 1}), -1},
                               {whole_units({ni + ki}), 1}});
  LaurentPoly denominator(ring, {{whole_units({0}), 1}, {whole_units({2}), -1}});
  LaurentPoly quotient = exact_div(numerator, denominator);
  // (n-1)(k-1)/2 in quarter units.
  Exponents shift;
  shift.quarters[0] = 2 * (ni - 1) * (ki - 1);
  return quotient.scaled(shift, 1);
}

LaurentPoly jones_qp_form(std::uint64_t m) {
  LaurentPoly upper = specialize(qp_number(m + 1), QpMode::q3q);
  LaurentPoly lower = specialize(qp_number(m), QpMode::q3q);
  return upper - lower.scaled(whole_units({4}), 1);
}

LaurentPoly gjones_knot(std::uint64_t m) {
  LaurentPoly upper = specialize(qp_number(m + 1), QpMode::q3p);
  LaurentPoly lower = specialize(qp_number(m), QpMode::q3p);
  return upper - lower.scaled(whole_units({3, 1}), 1);
}

RationalFn gjones_recurrence(std::uint64_t n) { return invariant_step1(preset("gjones"), n); }

namespace {

const std::map<std::string, LaurentPoly>& homfly_bridge() {
  static const std::map<std::string, LaurentPoly> replacements = {
      {"a", parse_poly("q^(3/4)*p^(1/4)", qp_ring())},
      {"z", parse_poly("q^(3/4)*p^(-1/4) - q^(-3/4)*p^(1/4)", qp_ring())},
  };
  return replacements;
}

}  // namespace

RationalFn homfly_to_gjones(const LaurentPoly& h) {
  require_same_ring(h.ring(), homfly_ring());
  return substitute(h, homfly_bridge(), qp_ring());
}

RationalFn homfly_to_gjones(const RationalFn& h) {
  require_same_ring(h.ring(), homfly_ring());
  return substitute(h, homfly_bridge(), qp_ring());
}

LaurentPoly reduce_to_jones(const LaurentPoly& g) {
  require_same_ring(g.ring(), qp_ring());
  return substitute_monomial(g, "p", 1, whole_units({1}), jones_ring());
}

RationalFn reduce_to_jones(const RationalFn& g) {
  if (g.is_polynomial()) return reduce_to_jones(g.numerator());
  return RationalFn(reduce_to_jones(g.numerator()), reduce_to_jones(g.denominator()));
}

}  // namespace holoknot
