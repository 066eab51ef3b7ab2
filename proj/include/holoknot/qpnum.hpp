#pragma once

// (q,p)-numbers [n] = (q^n - p^n) / (q - p) over the ring [q, p].

#include <cstdint>

#include "holoknot/laurent.hpp"

namespace holoknot {

// The ring [q, p] every (q,p)-number lives in.
const Ring& qp_ring();

// Sum_{i=0}^{n-1} q^(n-1-i) p^i; zero for n = 0.
LaurentPoly qp_number(std::uint64_t n);

// (q + p) * curr - q * p * prev, i.e. [n+1] from ([n], [n-1]).
LaurentPoly qp_recurrence_step(const LaurentPoly& curr, const LaurentPoly& prev);

enum class QpMode {
  q3q,  // q -> q^3 then p -> q, result over [q]
  q3p,  // q -> q^3, result over [q, p]
};

LaurentPoly specialize(const LaurentPoly& a, QpMode mode);

}  // namespace holoknot
