#include "record.hpp"

#include <vector>

namespace holoknot::cli {

nlohmann::ordered_json terms_to_json(const LaurentPoly& p) {
  auto terms = nlohmann::ordered_json::array();
  const std::size_t arity = p.ring().arity();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = t.coeff.get_str();
    auto exp = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < arity; ++i) exp.push_back(t.exp.quarters[i]);
    term["exp"] = std::move(exp);
    terms.push_back(std::move(term));
  }
  return terms;
}

LaurentPoly terms_from_json(const nlohmann::ordered_json& terms, const Ring& ring) {
  std::vector<Term> out;
  for (const auto& term : terms) {
    Term t;
    t.coeff = mpz_class(term.at("coeff").get<std::string>());
    const auto& exp = term.at("exp");
    if (exp.size() != ring.arity()) throw DomainError("exponent vector does not match ring " + ring.describe());
    for (std::size_t i = 0; i < ring.arity(); ++i) t.exp.quarters[i] = exp.at(i).get<std::int64_t>();
    out.push_back(std::move(t));
  }
  return LaurentPoly(ring, std::move(out));
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["method"] = r.method;
  j["ring"]["vars"] = r.value.ring().variables();
  j["ring"]["denom"] = r.value.ring().exponent_denominator();
  j["terms"] = terms_to_json(r.value.numerator());
  if (!r.value.is_polynomial()) j["den_terms"] = terms_to_json(r.value.denominator());
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  if (j.at("ring").at("denom").get<std::int64_t>() != kExponentDenominator) {
    throw DomainError("unsupported exponent denominator in record");
  }
  Ring ring(j.at("ring").at("vars").get<std::vector<std::string>>());
  LaurentPoly num = terms_from_json(j.at("terms"), ring);
  RationalFn value = j.contains("den_terms")
                         ? RationalFn::unsimplified(std::move(num), terms_from_json(j.at("den_terms"), ring))
                         : RationalFn(std::move(num));
  return OutputRecord{j.at("family").get<std::string>(), j.at("n").get<std::int64_t>(),
                      j.at("method").get<std::string>(), std::move(value)};
}

std::string to_json_line(const OutputRecord& r) { return to_json(r).dump(); }

}  // namespace holoknot::cli
