#pragma once

// One computed invariant as printed by the CLI, plus its JSON-lines encoding:
// {"family":..,"n":..,"method":..,"ring":{"vars":[..],"denom":4},
//  "terms":[{"coeff":"<decimal>","exp":[<quarter units>..]}..], "den_terms":[..]}
// "den_terms" is present only for values that are not polynomials.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "holoknot/ratfunc.hpp"

namespace holoknot::cli {

struct OutputRecord {
  std::string family;
  std::int64_t n = 0;
  std::string method;
  RationalFn value;
};

nlohmann::ordered_json terms_to_json(const LaurentPoly& p);
LaurentPoly terms_from_json(const nlohmann::ordered_json& terms, const Ring& ring);

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

// Single line, no trailing newline.
std::string to_json_line(const OutputRecord& r);

}  // namespace holoknot::cli
