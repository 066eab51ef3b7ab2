#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "holoknot/torus.hpp"
#include "record.hpp"

using namespace holoknot;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) result.push_back(line);
  return result;
}

}  // namespace

TEST_CASE("invariant") {
  auto r = run({"invariant", "--family", "jones", "--n", "3", "--method", "closed"});
  CHECK(r.code == 0);
  CHECK(r.out == "q + q^3 - q^4\n");
  CHECK(run({"invariant", "--family", "jones", "--n", "1", "--method", "step1"}).out == "1\n");
  CHECK(run({"invariant", "--family", "gjones", "--n", "3", "--method", "step1"}).out == "p + q^3 - p*q^3\n");
  for (const char* method : {"step1", "step2", "closed", "qp", "bridge"}) {
    CAPTURE(method);
    auto v = run({"invariant", "--family", "jones", "--n", "5", "--method", method});
    CHECK(v.code == 0);
    CHECK(v.out == "q^2 + q^4 - q^5 + q^6 - q^7\n");
  }
  CHECK(run({"invariant", "--family", "gjones", "--n", "5", "--method", "qp"}).out ==
        run({"invariant", "--family", "gjones", "--n", "5", "--method", "bridge"}).out);
  r = run({"invariant", "--family", "custom", "--vars", "q", "--l1", "q^(3/2) - q^(1/2)", "--l2", "q^2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "q + q^3 - q^4\n");
}

TEST_CASE("invariant usage errors") {
  CHECK(run({"invariant", "--family", "homfly", "--n", "3", "--method", "closed"}).code == 2);
  CHECK(run({"invariant", "--family", "jones", "--n", "4", "--method", "step2"}).code == 2);
  CHECK(run({"invariant", "--family", "alexander", "--n", "3", "--method", "qp"}).code == 2);
  CHECK(run({"invariant", "--family", "nope", "--n", "3"}).code == 2);
  CHECK(run({"invariant", "--family", "jones"}).code == 2);
  CHECK(run({"invariant", "--family", "custom", "--n", "3"}).code == 2);
  CHECK(run({"invariant", "--family", "custom", "--l1", "q^(", "--l2", "1", "--n", "3"}).code == 2);
  CHECK(run({}).code == 2);
  // T(2, 2) is a link; the closed form has no Laurent quotient.
  CHECK(run({"invariant", "--family", "jones", "--n", "2", "--method", "closed"}).code == 2);
  CHECK(run({"invariant", "--family", "jones", "--n", "3", "--method", "closed", "--k", "3"}).code == 0);
  CHECK(run({"invariant", "--family", "jones", "--n", "4", "--method", "closed", "--k", "2"}).code == 2);
  CHECK(run({"invariant", "--family", "jones", "--n", "2", "--method", "closed", "--k", "4"}).code == 1);
}

TEST_CASE("table") {
  auto r = run({"table", "--family", "jones", "--n-max", "3"});
  CHECK(r.code == 0);
  auto text = lines(r.out);
  REQUIRE(text.size() == 4);
  CHECK(text[0] == "n=0: -q^(-1/2) - q^(1/2)");
  CHECK(text[3] == "n=3: q + q^3 - q^4");

  r = run({"table", "--family", "homfly", "--n-max", "2"});
  text = lines(r.out);
  REQUIRE(text.size() == 3);
  CHECK(text[2] == "n=2: a*z^-1 + a*z - a^3*z^-1");

  for (const char* family : {"alexander", "jones", "homfly", "gjones"}) {
    CAPTURE(family);
    r = run({"table", "--family", family, "--n-max", "0", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 1);
  }
  CHECK(run({"table", "--family", "jones", "--format", "yaml"}).code == 2);
}

TEST_CASE("JSON records") {
  auto r = run({"invariant", "--family", "jones", "--n", "3", "--method", "closed", "--format", "json"});
  CHECK(r.out ==
        "{\"family\":\"jones\",\"n\":3,\"method\":\"closed\",\"ring\":{\"vars\":[\"q\"],\"denom\":4},"
        "\"terms\":[{\"coeff\":\"1\",\"exp\":[4]},{\"coeff\":\"1\",\"exp\":[12]},{\"coeff\":\"-1\",\"exp\":[16]}]}\n");

  for (const char* family : {"alexander", "jones", "homfly", "gjones"}) {
    CAPTURE(family);
    const SkeinFamily f = preset(family);
    const auto seq = step1_sequence(f, 12);
    r = run({"table", "--family", family, "--n-max", "12", "--format", "json"});
    const auto json_lines = lines(r.out);
    REQUIRE(json_lines.size() == seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
      const auto j = nlohmann::ordered_json::parse(json_lines[n]);
      const cli::OutputRecord back = cli::record_from_json(j);
      CHECK(back.family == family);
      CHECK(back.n == static_cast<std::int64_t>(n));
      CHECK(back.method == "step1");
      CHECK(same_representation(back.value, seq[n]));
      CHECK(j.contains("den_terms") == !seq[n].is_polynomial());
      // Rendered numerator re-parses to the structured terms.
      CHECK(parse_poly(render(back.value.numerator()), f.ring) == seq[n].numerator());
    }
  }
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"table", "--family", "gjones", "--n-max", "15", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> verify{"verify", "--suite", "ring", "--cases", "50"};
  CHECK(run(verify).out.substr(0, 40) == run(verify).out.substr(0, 40));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "jones"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4-way agreement n=1..201: PASS") != std::string::npos);
  r = run({"verify", "--suite", "qp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  for (const char* mutation : {"k2-sign", "l1-sign", "l2-sign"}) {
    CAPTURE(mutation);
    r = run({"verify", "--suite", "all", "--mutate", mutation});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL at n=") != std::string::npos);
  }
  CHECK(run({"verify", "--suite", "everything"}).code == 2);
}

TEST_CASE("map-coefficients") {
  auto r = run({"map-coefficients", "--direction", "l2k", "--expr1", "q^(3/2)-q^(1/2)", "--expr2", "q^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "k1 = q + q^3\nk2 = -q^4\n");
  r = run({"map-coefficients", "--direction", "k2l", "--expr1", "q+q^3", "--expr2", "-q^4"});
  CHECK(r.code == 0);
  CHECK(r.out == "l1 = -q^(1/2) + q^(3/2)\nl2 = q^2\n");
  r = run({"map-coefficients", "--direction", "k2l", "--expr1", "q^3+p", "--expr2", "-q^3*p", "--vars", "q,p"});
  CHECK(r.code == 0);
  CHECK(r.out == "l1 = -p^(1/2) + q^(3/2)\nl2 = p^(1/2)*q^(3/2)\n");
  r = run({"map-coefficients", "--direction", "k2l", "--expr1", "q+1", "--expr2", "-q^4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("square") != std::string::npos);
  CHECK(run({"map-coefficients", "--direction", "k2l", "--expr1", "q+", "--expr2", "-q^4"}).code == 2);
  CHECK(run({"map-coefficients", "--direction", "k2l", "--expr1", "x", "--expr2", "-q^4"}).code == 2);
  CHECK(run({"map-coefficients", "--direction", "sideways", "--expr1", "q", "--expr2", "q"}).code == 2);
}
