#pragma once

// Invariants of the 2-strand torus family L(n,2): odd n gives the knot T(n,2)
// (n = 1 is the unknot), even n the two-component link (n = 0 is the unlink,
// n = 2 the Hopf link).

#include <cstdint>
#include <vector>

#include "holoknot/families.hpp"
#include "holoknot/laurent.hpp"
#include "holoknot/ratfunc.hpp"

namespace holoknot {

// P_0 .. P_{n_max} of P_{j+1} = l1 P_j + l2 P_{j-1} with P_0 = unlink seed, P_1 = 1.
std::vector<RationalFn> step1_sequence(const SkeinFamily& family, std::uint64_t n_max);
RationalFn invariant_step1(const SkeinFamily& family, std::uint64_t n);

// P_1, P_3, .., P_{2 m_max + 1} of P_{n+2} = k1 P_n + k2 P_{n-2} with P_1 = 1, P_3 = k1 + k2.
std::vector<LaurentPoly> step2_knot_sequence(const HolographicMap& k, std::uint64_t m_max);
LaurentPoly invariant_step2_knot(const HolographicMap& k, std::uint64_t m);
LaurentPoly invariant_step2_knot(const SkeinFamily& family, std::uint64_t m);

// q^((n-1)(k-1)/2) (1 - q^(n+1) - q^(k+1) + q^(n+k)) / (1 - q^2), over [q].
// InexactDivision when the quotient is not a Laurent polynomial.
LaurentPoly jones_closed_form(std::uint64_t n, std::uint64_t k);

// [m+1] - q^4 [m] in (q^3, q)-numbers, over [q]; the Jones polynomial of T(2m+1, 2).
LaurentPoly jones_qp_form(std::uint64_t m);

// [m+1] - q^3 p [m] in (q^3, p)-numbers, over [q, p].
LaurentPoly gjones_knot(std::uint64_t m);

RationalFn gjones_recurrence(std::uint64_t n);

// a -> q^(3/4) p^(1/4), z -> q^(3/4) p^(-1/4) - q^(-3/4) p^(1/4); [a, z] to [q, p].
RationalFn homfly_to_gjones(const LaurentPoly& h);
RationalFn homfly_to_gjones(const RationalFn& h);

// p -> q; [q, p] to [q].
LaurentPoly reduce_to_jones(const LaurentPoly& g);
RationalFn reduce_to_jones(const RationalFn& g);

const Ring& jones_ring();
const Ring& homfly_ring();

}  // namespace holoknot
