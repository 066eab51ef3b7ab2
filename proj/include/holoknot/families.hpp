#pragma once

// Skein-coefficient families P(L+) = l1 P(L0) + l2 P(L-) with P(unknot) = 1,
// and the coefficient map to the knot-only (step-2) recurrence
// P(n+2) = k1 P(n) + k2 P(n-2).

#include <array>
#include <string>
#include <string_view>

#include "holoknot/laurent.hpp"
#include "holoknot/ratfunc.hpp"

namespace holoknot {

struct SkeinFamily {
  std::string name;
  Ring ring;
  LaurentPoly l1;
  LaurentPoly l2;
  LaurentPoly seed_p1;       // unknot, always 1
  RationalFn seed_unlink2;   // 2-component unlink, (1 - l2) / l1
};

struct HolographicMap {
  LaurentPoly k1;
  LaurentPoly k2;
};

struct SkeinCoefficients {
  LaurentPoly l1;
  LaurentPoly l2;
};

inline constexpr std::array<std::string_view, 4> kPresetNames = {"alexander", "jones", "homfly", "gjones"};

// alexander [t], jones [q], homfly [a, z], gjones [q, p]. DomainError on other names.
SkeinFamily preset(std::string_view name);

// Family from arbitrary coefficients over a common ring; seeds are derived.
SkeinFamily make_family(std::string name, LaurentPoly l1, LaurentPoly l2);

HolographicMap k_from_l(const LaurentPoly& l1, const LaurentPoly& l2);
inline HolographicMap k_from_l(const SkeinFamily& f) { return k_from_l(f.l1, f.l2); }

// Thrown by l_from_k; step() is 1 when -k2 has no square root and 2 when k1 - 2 l2 has none.
class CoefficientInversionError : public NotPerfectSquare {
 public:
  CoefficientInversionError(int step, const std::string& message)
      : NotPerfectSquare(message), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

// Inverts k_from_l on the branch with positive leading coefficients.
SkeinCoefficients l_from_k(const HolographicMap& k);

// Value of the 2-component unlink forced by a one-kink unknot diagram:
// 1 = l1 * U + l2 * 1. DomainError when l1 = 0.
RationalFn unlink2_seed(const LaurentPoly& l1, const LaurentPoly& l2);

}  // namespace holoknot
