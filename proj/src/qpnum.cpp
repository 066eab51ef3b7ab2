#include "holoknot/qpnum.hpp"

#include <vector>

namespace holoknot {

const Ring& qp_ring() {
  static const Ring ring{"q", "p"};
  return ring;
}

LaurentPoly qp_number(std::uint64_t n) {
  std::vector<Term> terms;
  terms.reserve(n);
  const auto top = static_cast<std::int64_t>(n) - 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    terms.push_back({whole_units({top - i, i}), 1});
  }
  return LaurentPoly(qp_ring(), std::move(terms));
}

LaurentPoly qp_recurrence_step(const LaurentPoly& curr, const LaurentPoly& prev) {
  const Ring& ring = qp_ring();
  require_same_ring(curr.ring(), ring);
  require_same_ring(prev.ring(), ring);
  static const LaurentPoly q_plus_p = parse_poly("q + p", qp_ring());
  return q_plus_p * curr - prev.scaled(whole_units({1, 1}), 1);
}

LaurentPoly specialize(const LaurentPoly& a, QpMode mode) {
  require_same_ring(a.ring(), qp_ring());
  LaurentPoly cubed = substitute_monomial(a, "q", 1, whole_units({3, 0}), qp_ring());
  if (mode == QpMode::q3p) return cubed;
  static const Ring q_only{"q"};
  return substitute_monomial(cubed, "p", 1, whole_units({1}), q_only);
}

}  // namespace holoknot
