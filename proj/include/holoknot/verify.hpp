#pragma once

// Identity suites behind `holoknot verify`.
//
// Each check compares independent computation routes and reports the first
// counterexample it meets. A Mutation deliberately corrupts one coefficient
// before the suites run so that their sensitivity can itself be tested.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "holoknot/families.hpp"
#include "holoknot/laurent.hpp"

namespace holoknot {

enum class Suite { all, jones, gjones, bridge, qp, ring };
enum class Mutation { none, k2_sign, l1_sign, l2_sign };

Suite parse_suite(std::string_view name);
Mutation parse_mutation(std::string_view name);
std::string_view suite_name(Suite s);
std::string_view mutation_name(Mutation m);

struct VerifyOptions {
  Mutation mutation = Mutation::none;
  std::uint64_t seed = 0x5eed2024;
  std::size_t random_cases = 1000;
  std::uint64_t jones_n_max = 201;      // odd n for the four-way agreement and degree span
  std::uint64_t parity_n_max = 200;     // evaluation at q = 1
  std::uint64_t qp_n_max = 200;
  std::uint64_t reduction_m_max = 100;
  std::uint64_t bridge_odd_max = 101;
  std::uint64_t bridge_even_max = 100;
  std::uint64_t compatibility_n_max = 60;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::int64_t> counterexample_n;
  std::string detail;  // counterexample rendering when failed
  double seconds = 0;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

// Preset with the requested mutation applied to l1 or l2 (seeds re-derived).
SkeinFamily verification_family(std::string_view name, Mutation mutation);
// k_from_l of the family, with k2 negated under Mutation::k2_sign.
HolographicMap verification_map(const SkeinFamily& family, Mutation mutation);

struct RandomPolyShape {
  std::size_t max_terms = 6;
  std::int64_t max_quarters = 12;  // exponents drawn from [-max, max] quarter units
  long max_coeff = 9;              // coefficients drawn from [-max, max] \ {0}
};

// Random sparse element of ring; may be zero when max_terms allows it.
LaurentPoly random_poly(std::mt19937_64& rng, const Ring& ring, const RandomPolyShape& shape = {});
LaurentPoly random_nonzero_poly(std::mt19937_64& rng, const Ring& ring, const RandomPolyShape& shape = {});

}  // namespace holoknot
