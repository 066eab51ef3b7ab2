#include "holoknot/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "holoknot/qpnum.hpp"
#include "holoknot/ratfunc.hpp"
#include "holoknot/torus.hpp"

namespace holoknot {

namespace {

struct Failure {
  std::optional<std::int64_t> n;
  std::string detail;
};

using Outcome = std::optional<Failure>;

Failure at(std::int64_t n, std::string detail) { return Failure{n, std::move(detail)}; }
Failure plain(std::string detail) { return Failure{std::nullopt, std::move(detail)}; }

CheckResult run_check(std::string name, const std::function<Outcome()>& body) {
  CheckResult result;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (auto failure = body()) {
      result.passed = false;
      result.counterexample_n = failure->n;
      result.detail = std::move(failure->detail);
    }
  } catch (const Error& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string range(std::string_view what, std::uint64_t lo, std::uint64_t hi) {
  std::ostringstream out;
  out << what;
  if (!what.empty() && what.back() != '=') out << " ";
  out << lo << ".." << hi;
  return out.str();
}

mpq_class eval_at_one(const RationalFn& f) {
  std::map<std::string, mpq_class> ones;
  for (const auto& v : f.ring().variables()) ones[v] = 1;
  const mpq_class den = eval_rational(f.denominator(), ones);
  if (sgn(den) == 0) throw EvaluationError("denominator vanishes at 1");
  return eval_rational(f.numerator(), ones) / den;
}

// ---------------------------------------------------------------- qp

void qp_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const std::uint64_t n_max = opt.qp_n_max;
  const Ring& ring = qp_ring();
  const LaurentPoly q = LaurentPoly::variable(ring, "q");
  const LaurentPoly p = LaurentPoly::variable(ring, "p");

  out.push_back(run_check(range("qp recurrence vs closed form n=", 0, n_max), [&]() -> Outcome {
    LaurentPoly prev = qp_number(0);
    LaurentPoly curr = qp_number(1);
    if (!prev.is_zero()) return at(0, "[0] = " + render(prev));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const LaurentPoly closed = qp_number(n);
      if (!(curr == closed)) return at(static_cast<std::int64_t>(n), "recurrence = " + render(curr) + ", closed = " + render(closed));
      LaurentPoly next = qp_recurrence_step(curr, prev);
      prev = std::move(curr);
      curr = std::move(next);
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("(q-p)[n] = q^n - p^n n=", 0, n_max), [&]() -> Outcome {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const LaurentPoly lhs = (q - p) * qp_number(n);
      const LaurentPoly rhs = pow(q, n) - pow(p, n);
      if (!(lhs == rhs)) return at(static_cast<std::int64_t>(n), render(lhs) + " != " + render(rhs));
      const LaurentPoly quotient = exact_div(rhs, q - p);
      if (!(quotient == qp_number(n))) return at(static_cast<std::int64_t>(n), "quotient " + render(quotient));
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("qp symmetry q<->p n=", 0, n_max), [&]() -> Outcome {
    const Ring swapped{"p", "q"};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const LaurentPoly v = qp_number(n);
      // Reading the ring as [p, q] swaps the variables; rebase moves it back by name.
      const LaurentPoly mirrored = rebase(LaurentPoly(swapped, std::vector<Term>(v.terms().begin(), v.terms().end())), ring);
      if (!(mirrored == v)) return at(static_cast<std::int64_t>(n), render(v) + " vs " + render(mirrored));
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("(q^3,q) recurrence n=", 1, n_max - 1), [&]() -> Outcome {
    const LaurentPoly k1 = parse_poly("q + q^3", jones_ring());
    const LaurentPoly k2 = parse_poly("q^4", jones_ring());
    for (std::uint64_t n = 1; n + 1 <= n_max; ++n) {
      const LaurentPoly lhs = specialize(qp_number(n + 1), QpMode::q3q);
      const LaurentPoly rhs = k1 * specialize(qp_number(n), QpMode::q3q) - k2 * specialize(qp_number(n - 1), QpMode::q3q);
      if (!(lhs == rhs)) return at(static_cast<std::int64_t>(n + 1), render(lhs) + " != " + render(rhs));
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("(q^3,p) recurrence n=", 1, n_max - 1), [&]() -> Outcome {
    const LaurentPoly k1 = parse_poly("q^3 + p", ring);
    const LaurentPoly k2 = parse_poly("q^3*p", ring);
    for (std::uint64_t n = 1; n + 1 <= n_max; ++n) {
      const LaurentPoly lhs = specialize(qp_number(n + 1), QpMode::q3p);
      const LaurentPoly rhs = k1 * specialize(qp_number(n), QpMode::q3p) - k2 * specialize(qp_number(n - 1), QpMode::q3p);
      if (!(lhs == rhs)) return at(static_cast<std::int64_t>(n + 1), render(lhs) + " != " + render(rhs));
    }
    return std::nullopt;
  }));
}

// ---------------------------------------------------------------- jones and families

void jones_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const Mutation mut = opt.mutation;
  const SkeinFamily jones = verification_family("jones", mut);
  const HolographicMap jmap = verification_map(jones, mut);
  const std::uint64_t n_max = opt.jones_n_max | 1U;  // odd
  const std::vector<RationalFn> s1 = step1_sequence(jones, std::max(n_max, opt.parity_n_max));
  const std::vector<LaurentPoly> s2 = step2_knot_sequence(jmap, (n_max - 1) / 2);

  out.push_back(run_check("reference values J1 = 1, J3 = q + q^3 - q^4 (4 methods)", [&]() -> Outcome {
    const LaurentPoly expected[2] = {parse_poly("1", jones_ring()), parse_poly("q + q^3 - q^4", jones_ring())};
    for (std::uint64_t m = 0; m <= 1; ++m) {
      const std::uint64_t n = 2 * m + 1;
      const RationalFn routes[4] = {s1[n], RationalFn(s2[m]), RationalFn(jones_closed_form(n, 2)),
                                    RationalFn(jones_qp_form(m))};
      const char* names[4] = {"step1", "step2", "closed", "qp"};
      for (int r = 0; r < 4; ++r) {
        if (!rf_equal(routes[r], RationalFn(expected[m]))) {
          return at(static_cast<std::int64_t>(n), std::string(names[r]) + " = " + render(routes[r]) +
                                                       ", expected " + render(expected[m]));
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("4-way agreement n=", 1, n_max), [&]() -> Outcome {
    for (std::uint64_t n = 1; n <= n_max; n += 2) {
      const std::uint64_t m = (n - 1) / 2;
      const RationalFn& a = s1[n];
      const LaurentPoly& b = s2[m];
      const LaurentPoly c = jones_closed_form(n, 2);
      const LaurentPoly d = jones_qp_form(m);
      if (!a.is_polynomial() || !(a.numerator() == b) || !(b == c) || !(c == d)) {
        return at(static_cast<std::int64_t>(n), "step1 = " + render(a) + ", step2 = " + render(b) +
                                                     ", closed = " + render(c) + ", qp = " + render(d));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("coefficient map jones: k = (q + q^3, -q^4) and back", [&]() -> Outcome {
    const LaurentPoly k1 = parse_poly("q + q^3", jones_ring());
    const LaurentPoly k2 = parse_poly("-q^4", jones_ring());
    if (!(jmap.k1 == k1) || !(jmap.k2 == k2)) {
      return plain("k1 = " + render(jmap.k1) + ", k2 = " + render(jmap.k2));
    }
    const SkeinCoefficients l = l_from_k(jmap);
    if (!(l.l1 == parse_poly("q^(3/2) - q^(1/2)", jones_ring())) || !(l.l2 == parse_poly("q^2", jones_ring()))) {
      return plain("l1 = " + render(l.l1) + ", l2 = " + render(l.l2));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("coefficient round trip l -> k -> l (all presets)", [&]() -> Outcome {
    for (auto name : kPresetNames) {
      const SkeinFamily f = verification_family(name, mut);
      const SkeinCoefficients l = l_from_k(verification_map(f, mut));
      if (!(l.l1 == f.l1) || !(l.l2 == f.l2)) {
        return plain(std::string(name) + ": l1 = " + render(f.l1) + " -> " + render(l.l1) +
                     ", l2 = " + render(f.l2) + " -> " + render(l.l2));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("unlink seed l1*U + l2 = 1 (all presets)", [&]() -> Outcome {
    for (auto name : kPresetNames) {
      const SkeinFamily f = verification_family(name, mut);
      const RationalFn lhs = RationalFn(f.l1) * f.seed_unlink2 + RationalFn(f.l2);
      if (!rf_equal(lhs, RationalFn(LaurentPoly::constant(f.ring, 1)))) {
        return at(0, std::string(name) + ": " + render(lhs));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("step-2 seed k1 + k2 = step-1 P3 (all presets)", [&]() -> Outcome {
    for (auto name : kPresetNames) {
      const SkeinFamily f = verification_family(name, mut);
      const HolographicMap k = verification_map(f, mut);
      const RationalFn p3 = invariant_step1(f, 3);
      const LaurentPoly seed = invariant_step2_knot(k, 1);
      if (!rf_equal(p3, RationalFn(seed))) {
        return at(3, std::string(name) + ": step1 = " + render(p3) + ", k1 + k2 = " + render(seed));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("step-1/step-2 compatibility (all presets) n=", 0, opt.compatibility_n_max),
                          [&]() -> Outcome {
    for (auto name : kPresetNames) {
      const SkeinFamily f = verification_family(name, mut);
      const HolographicMap k = verification_map(f, mut);
      const RationalFn k1(k.k1);
      const RationalFn k2(k.k2);
      const auto seq = step1_sequence(f, opt.compatibility_n_max);
      for (std::uint64_t n = 4; n <= opt.compatibility_n_max; ++n) {
        const RationalFn rhs = k1 * seq[n - 2] + k2 * seq[n - 4];
        if (!rf_equal(seq[n], rhs)) {
          return at(static_cast<std::int64_t>(n), std::string(name) + ": step1 = " + render(seq[n]) +
                                                       ", k1*P(n-2) + k2*P(n-4) = " + render(rhs));
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("Jones degree span n=", 3, n_max), [&]() -> Outcome {
    for (std::uint64_t n = 3; n <= n_max; n += 2) {
      const auto ni = static_cast<std::int64_t>(n);
      const std::int64_t lo = 2 * (ni - 1);      // (n-1)/2 in quarter units
      const std::int64_t hi = 2 * (3 * ni - 1);  // (3n-1)/2 in quarter units
      for (const RationalFn& v : {s1[n], RationalFn(jones_closed_form(n, 2))}) {
        if (!v.is_polynomial() || v.is_zero() || v.numerator().trailing().exp.quarters[0] != lo ||
            v.numerator().leading().exp.quarters[0] != hi) {
          return at(ni, render(v) + " spans outside [" + render_exponent(lo) + ", " + render_exponent(hi) + "]");
        }
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("Jones at q=1 is 1 (odd) / -2 (even) n=", 0, opt.parity_n_max), [&]() -> Outcome {
    for (std::uint64_t n = 0; n <= opt.parity_n_max; ++n) {
      const mpq_class expected = (n % 2 == 1) ? 1 : -2;
      const mpq_class got = eval_at_one(s1[n]);
      if (got != expected) {
        return at(static_cast<std::int64_t>(n), "J(1) = " + got.get_str() + " for " + render(s1[n]));
      }
    }
    return std::nullopt;
  }));
}

// ---------------------------------------------------------------- gjones

void gjones_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const Mutation mut = opt.mutation;
  const SkeinFamily g = verification_family("gjones", mut);
  const std::uint64_t m_max = opt.reduction_m_max;
  const auto gseq = step1_sequence(g, 2 * m_max + 1);

  out.push_back(run_check(range("gjones recurrence = (q^3,p) form odd n=", 1, 2 * m_max + 1), [&]() -> Outcome {
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const RationalFn& rec = gseq[2 * m + 1];
      const LaurentPoly closed = gjones_knot(m);
      if (!rec.is_polynomial() || !(rec.numerator() == closed)) {
        return at(static_cast<std::int64_t>(2 * m + 1), "recurrence = " + render(rec) + ", closed = " + render(closed));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("reduction p->q of (q^3,p) form = (q^3,q) form m=", 0, m_max), [&]() -> Outcome {
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      const LaurentPoly reduced = reduce_to_jones(gjones_knot(m));
      const LaurentPoly jones = jones_qp_form(m);
      if (!(reduced == jones)) {
        return at(static_cast<std::int64_t>(2 * m + 1), "reduced = " + render(reduced) + ", jones = " + render(jones));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("gjones at p=q equals Jones recurrence n=", 0, 2 * m_max), [&]() -> Outcome {
    const auto jseq = step1_sequence(verification_family("jones", mut), 2 * m_max);
    for (std::uint64_t n = 0; n <= 2 * m_max; ++n) {
      const RationalFn reduced = reduce_to_jones(gseq[n]);
      if (!rf_equal(reduced, jseq[n])) {
        return at(static_cast<std::int64_t>(n), "reduced = " + render(reduced) + ", jones = " + render(jseq[n]));
      }
    }
    return std::nullopt;
  }));
}

// ---------------------------------------------------------------- bridge

void bridge_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const Mutation mut = opt.mutation;
  const std::uint64_t n_max = std::max(opt.bridge_odd_max, opt.bridge_even_max);
  const auto hseq = step1_sequence(verification_family("homfly", mut), n_max);
  const auto gseq = step1_sequence(verification_family("gjones", mut), n_max);

  out.push_back(run_check(range("HOMFLY bridge odd n=", 1, opt.bridge_odd_max), [&]() -> Outcome {
    for (std::uint64_t n = 1; n <= opt.bridge_odd_max; n += 2) {
      const RationalFn bridged = homfly_to_gjones(hseq[n]);
      if (!bridged.is_polynomial() || !gseq[n].is_polynomial() || !(bridged.numerator() == gseq[n].numerator())) {
        return at(static_cast<std::int64_t>(n), "bridged = " + render(bridged) + ", gjones = " + render(gseq[n]));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("HOMFLY bridge even n=", 0, opt.bridge_even_max), [&]() -> Outcome {
    for (std::uint64_t n = 0; n <= opt.bridge_even_max; n += 2) {
      const RationalFn bridged = homfly_to_gjones(hseq[n]);
      if (!rf_equal(bridged, gseq[n])) {
        return at(static_cast<std::int64_t>(n), "bridged = " + render(bridged) + ", gjones = " + render(gseq[n]));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check(range("HOMFLY z-parity n=", 0, n_max), [&]() -> Outcome {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (!hseq[n].is_polynomial()) return at(static_cast<std::int64_t>(n), "not polynomial: " + render(hseq[n]));
      const std::int64_t want = (n % 2 == 1) ? 0 : 1;
      for (const auto& t : hseq[n].numerator().terms()) {
        const std::int64_t z = t.exp.quarters[1];
        if (z % kExponentDenominator != 0 || ((z / kExponentDenominator) % 2 + 2) % 2 != want) {
          return at(static_cast<std::int64_t>(n), "z^" + render_exponent(z) + " in " + render(hseq[n]));
        }
      }
    }
    return std::nullopt;
  }));
}

// ---------------------------------------------------------------- ring

void ring_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const Ring qp = qp_ring();
  const Ring az = homfly_ring();
  const std::size_t cases = opt.random_cases;
  const std::string suffix = " (" + std::to_string(cases) + " random cases)";

  out.push_back(run_check("ring axioms" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed);
    const LaurentPoly zero(qp);
    const LaurentPoly one = LaurentPoly::constant(qp, 1);
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_poly(rng, qp);
      const auto b = random_poly(rng, qp);
      const auto c = random_poly(rng, qp);
      const bool ok = a + b == b + a && (a + b) + c == a + (b + c) && a * b == b * a &&
                      (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + zero == a &&
                      a * one == a && a * zero == zero && a - a == zero;
      if (!ok) return plain("a = " + render(a) + ", b = " + render(b) + ", c = " + render(c));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("exact_div inverts mul" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 1);
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_poly(rng, qp);
      const auto b = random_nonzero_poly(rng, qp);
      const auto back = exact_div(a * b, b);
      if (!(back == a)) return plain("a = " + render(a) + ", b = " + render(b) + ", got " + render(back));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("sqrt_perfect inverts squaring" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 2);
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_nonzero_poly(rng, qp);
      const auto r = sqrt_perfect(a * a);
      if (!(r == a) && !(r == -a)) return plain("a = " + render(a) + ", got " + render(r));
      if (sgn(r.leading().coeff) <= 0) return plain("negative leading coefficient in " + render(r));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("parse/render round trip" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 3);
    for (std::size_t i = 0; i < cases; ++i) {
      const Ring& ring = (i % 2 == 0) ? qp : az;
      const auto a = random_poly(rng, ring);
      const std::string text = render(a);
      const auto back = parse_poly(text, ring);
      if (!(back == a) || render(back) != text) return plain(text + " -> " + render(back));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("identity substitution" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 4);
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_poly(rng, qp);
      const auto same = substitute_monomial(a, (i % 2 == 0) ? "q" : "p", 1,
                                            (i % 2 == 0) ? whole_units({1, 0}) : whole_units({0, 1}), qp);
      if (!(same == a)) return plain(render(a) + " -> " + render(same));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("evaluation is a ring homomorphism" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 5);
    const std::map<std::string, mpq_class> points[3] = {
        {{"q", 1}, {"p", 1}}, {{"q", 16}, {"p", 81}}, {{"q", mpq_class(1, 16)}, {"p", 625}}};
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_poly(rng, qp);
      const auto b = random_poly(rng, qp);
      const auto c = random_poly(rng, qp);
      const auto& point = points[i % 3];
      const mpq_class lhs = eval_rational(a * b + c, point);
      const mpq_class rhs = eval_rational(a, point) * eval_rational(b, point) + eval_rational(c, point);
      if (lhs != rhs) return plain("a = " + render(a) + ", b = " + render(b) + ", c = " + render(c));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("rational functions: equality and simplification" + suffix, [&]() -> Outcome {
    std::mt19937_64 rng(opt.seed + 6);
    const RandomPolyShape small{3, 8, 5};
    for (std::size_t i = 0; i < cases; ++i) {
      const auto a = random_poly(rng, qp, small);
      const auto b = random_nonzero_poly(rng, qp, small);
      const auto c = random_nonzero_poly(rng, qp, small);
      const RationalFn x = RationalFn::unsimplified(a * c, b * c);
      const RationalFn y(a, b);
      const RationalFn z(a * c * c, b * c * c);
      if (!rf_equal(x, x) || !rf_equal(x, y) || !rf_equal(y, x) || !rf_equal(y, z) || !rf_equal(x, z)) {
        return plain("a = " + render(a) + ", b = " + render(b) + ", c = " + render(c));
      }
      const RationalFn poly_sum = RationalFn(a) * RationalFn(b) + RationalFn(c);
      if (!poly_sum.is_polynomial()) return plain("polynomial inputs gave " + render(poly_sum));
      const RationalFn back = (y * RationalFn(b)) / RationalFn(b);
      if (!rf_equal(back, y)) return plain("(y*b)/b = " + render(back) + ", y = " + render(y));
    }
    return std::nullopt;
  }));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "jones") return Suite::jones;
  if (name == "gjones") return Suite::gjones;
  if (name == "bridge") return Suite::bridge;
  if (name == "qp") return Suite::qp;
  if (name == "ring") return Suite::ring;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

Mutation parse_mutation(std::string_view name) {
  if (name == "none") return Mutation::none;
  if (name == "k2-sign") return Mutation::k2_sign;
  if (name == "l1-sign") return Mutation::l1_sign;
  if (name == "l2-sign") return Mutation::l2_sign;
  throw DomainError("unknown mutation '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::jones: return "jones";
    case Suite::gjones: return "gjones";
    case Suite::bridge: return "bridge";
    case Suite::qp: return "qp";
    case Suite::ring: return "ring";
  }
  return "?";
}

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::k2_sign: return "k2-sign";
    case Mutation::l1_sign: return "l1-sign";
    case Mutation::l2_sign: return "l2-sign";
  }
  return "?";
}

SkeinFamily verification_family(std::string_view name, Mutation mutation) {
  SkeinFamily f = preset(name);
  switch (mutation) {
    case Mutation::l1_sign: return make_family(f.name, -f.l1, f.l2);
    case Mutation::l2_sign: return make_family(f.name, f.l1, -f.l2);
    default: return f;
  }
}

HolographicMap verification_map(const SkeinFamily& family, Mutation mutation) {
  HolographicMap k = k_from_l(family);
  if (mutation == Mutation::k2_sign) k.k2 = -k.k2;
  return k;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::ring) ring_suite(options, out);
  if (all || suite == Suite::qp) qp_suite(options, out);
  if (all || suite == Suite::jones) jones_suite(options, out);
  if (all || suite == Suite::gjones) gjones_suite(options, out);
  if (all || suite == Suite::bridge) bridge_suite(options, out);
  return out;
}

LaurentPoly random_poly(std::mt19937_64& rng, const Ring& ring, const RandomPolyShape& shape) {
  std::uniform_int_distribution<std::size_t> count(0, shape.max_terms);
  std::uniform_int_distribution<std::int64_t> exponent(-shape.max_quarters, shape.max_quarters);
  std::uniform_int_distribution<long> magnitude(1, shape.max_coeff);
  std::bernoulli_distribution negative(0.5);
  std::vector<Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Term t;
    for (std::size_t v = 0; v < ring.arity(); ++v) t.exp.quarters[v] = exponent(rng);
    const long c = magnitude(rng);
    t.coeff = negative(rng) ? -c : c;
    terms.push_back(std::move(t));
  }
  return LaurentPoly(ring, std::move(terms));
}

LaurentPoly random_nonzero_poly(std::mt19937_64& rng, const Ring& ring, const RandomPolyShape& shape) {
  for (;;) {
    LaurentPoly p = random_poly(rng, ring, shape);
    if (!p.is_zero()) return p;
  }
}

}  // namespace holoknot
