#include "cli.hpp"

#include <cstring>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "holoknot/families.hpp"
#include "holoknot/torus.hpp"
#include "holoknot/verify.hpp"
#include "record.hpp"

namespace holoknot::cli {

namespace {

// Invalid flag combination detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  std::string vars = "q";
  std::string l1;
  std::string l2;
};

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> vars;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    vars.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return vars;
}

SkeinFamily resolve_family(const FamilyArgs& a) {
  if (a.family != "custom") return preset(a.family);
  if (a.l1.empty() || a.l2.empty()) throw UsageError("family custom needs --l1 and --l2");
  Ring ring(split_vars(a.vars));
  return make_family("custom", parse_poly(a.l1, ring), parse_poly(a.l2, ring));
}

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "alexander, jones, homfly, gjones or custom")
      ->required()
      ->check(CLI::IsMember({"alexander", "jones", "homfly", "gjones", "custom"}));
  cmd->add_option("--vars", a.vars, "comma-separated ring variables for --family custom")->capture_default_str();
  cmd->add_option("--l1", a.l1, "l1 coefficient for --family custom");
  cmd->add_option("--l2", a.l2, "l2 coefficient for --family custom");
}

RationalFn compute(const SkeinFamily& family, std::uint64_t n, const std::string& method, std::uint64_t k) {
  const bool odd = n % 2 == 1;
  const std::uint64_t m = (n - 1) / 2;
  if (method == "step1") return invariant_step1(family, n);
  if (method == "step2") {
    if (!odd) throw UsageError("method step2 covers odd n (knots) only");
    return RationalFn(invariant_step2_knot(family, m));
  }
  if (method == "closed") {
    if (family.name != "jones") throw UsageError("method closed is available for family jones only");
    if (n == 0 || k == 0) throw UsageError("method closed needs n >= 1 and k >= 1");
    if (k == 2 && !odd) throw UsageError("method closed with k = 2 covers odd n (knots) only");
    return RationalFn(jones_closed_form(n, k));
  }
  if (method == "qp") {
    if (!odd) throw UsageError("method qp covers odd n (knots) only");
    if (family.name == "jones") return RationalFn(jones_qp_form(m));
    if (family.name == "gjones") return RationalFn(gjones_knot(m));
    throw UsageError("method qp is available for families jones and gjones only");
  }
  if (method == "bridge") {
    if (family.name != "jones" && family.name != "gjones") {
      throw UsageError("method bridge is available for families jones and gjones only");
    }
    RationalFn g = homfly_to_gjones(invariant_step1(preset("homfly"), n));
    return family.name == "jones" ? reduce_to_jones(g) : g;
  }
  throw UsageError("unknown method '" + method + "'");
}

void emit(std::ostream& out, const OutputRecord& r, const std::string& format, bool with_index) {
  if (format == "json") {
    out << to_json_line(r) << "\n";
  } else if (with_index) {
    out << "n=" << r.n << ": " << render(r.value) << "\n";
  } else {
    out << render(r.value) << "\n";
  }
}

std::vector<const char*> to_argv(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("holoknot");
  for (const auto& a : args) argv.push_back(a.c_str());
  return argv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial invariants of the torus knots and links L(n,2)", "holoknot"};
  app.require_subcommand(1);

  FamilyArgs inv_family;
  std::uint64_t inv_n = 0;
  std::string inv_method = "step1";
  std::uint64_t inv_k = 2;
  std::string inv_format = "text";
  auto* invariant = app.add_subcommand("invariant", "Compute one invariant");
  add_family_options(invariant, inv_family);
  invariant->add_option("--n", inv_n, "crossing count of L(n,2)")->required();
  invariant->add_option("--method", inv_method, "step1, step2, closed, qp or bridge")
      ->capture_default_str()
      ->check(CLI::IsMember({"step1", "step2", "closed", "qp", "bridge"}));
  invariant->add_option("--k", inv_k, "second torus parameter for --method closed")->capture_default_str();
  invariant->add_option("--format", inv_format)->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  FamilyArgs tab_family;
  std::uint64_t tab_n_max = 10;
  std::string tab_format = "text";
  auto* table = app.add_subcommand("table", "Step-1 invariants for n = 0..n-max");
  add_family_options(table, tab_family);
  table->add_option("--n-max", tab_n_max)->capture_default_str();
  table->add_option("--format", tab_format)->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  std::string suite = "all";
  std::string mutation = "none";
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run identity suites");
  verify->add_option("--suite", suite)
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "jones", "gjones", "bridge", "qp", "ring"}));
  verify->add_option("--mutate", mutation, "corrupt a coefficient first: none, k2-sign, l1-sign, l2-sign")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "k2-sign", "l1-sign", "l2-sign"}));
  verify->add_option("--cases", verify_opts.random_cases, "random cases per property")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();

  std::string direction;
  std::string expr1;
  std::string expr2;
  std::string map_vars = "q";
  auto* map = app.add_subcommand("map-coefficients", "Map (l1, l2) to (k1, k2) or back");
  map->add_option("--direction", direction)->required()->check(CLI::IsMember({"l2k", "k2l"}));
  map->add_option("--expr1", expr1, "l1 (l2k) or k1 (k2l)")->required();
  map->add_option("--expr2", expr2, "l2 (l2k) or k2 (k2l)")->required();
  map->add_option("--vars", map_vars, "comma-separated ring variables")->capture_default_str();

  auto argv = to_argv(args);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (invariant->parsed()) {
      const SkeinFamily f = resolve_family(inv_family);
      OutputRecord r{f.name, static_cast<std::int64_t>(inv_n), inv_method, compute(f, inv_n, inv_method, inv_k)};
      emit(out, r, inv_format, false);
      return kExitOk;
    }
    if (table->parsed()) {
      const SkeinFamily f = resolve_family(tab_family);
      const auto seq = step1_sequence(f, tab_n_max);
      for (std::uint64_t n = 0; n < seq.size(); ++n) {
        emit(out, OutputRecord{f.name, static_cast<std::int64_t>(n), "step1", seq[n]}, tab_format, true);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      verify_opts.mutation = parse_mutation(mutation);
      const auto results = run_suite(parse_suite(suite), verify_opts);
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << r.name << ": ";
        if (r.passed) {
          ++passed;
          out << "PASS\n";
        } else {
          out << "FAIL";
          if (r.counterexample_n) out << " at n=" << *r.counterexample_n;
          out << ": " << r.detail << "\n";
        }
      }
      out << "summary: " << passed << "/" << results.size() << " passed (suite " << suite << ", mutation "
          << mutation << ")\n";
      return passed == results.size() ? kExitOk : kExitFailure;
    }
    if (map->parsed()) {
      Ring ring(split_vars(map_vars));
      const LaurentPoly a = parse_poly(expr1, ring);
      const LaurentPoly b = parse_poly(expr2, ring);
      if (direction == "l2k") {
        const HolographicMap k = k_from_l(a, b);
        out << "k1 = " << render(k.k1) << "\n" << "k2 = " << render(k.k2) << "\n";
      } else {
        const SkeinCoefficients l = l_from_k(HolographicMap{a, b});
        out << "l1 = " << render(l.l1) << "\n" << "l2 = " << render(l.l2) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace holoknot::cli
