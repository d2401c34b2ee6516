// Acceptance runner: one PASS/FAIL line per criterion. All comparisons are
// exact (tolerance zero); the only numeric tolerances are the runtime budgets.

#include "gdpf/cli.hpp"
#include "gdpf/fuchsian.hpp"
#include "gdpf/griffiths_dwork.hpp"
#include "gdpf/jacobian.hpp"
#include "gdpf/kenyon_smillie.hpp"
#include "gdpf/parser.hpp"
#include "gdpf/plane_geometry.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gdpf;

namespace {

constexpr double kBudgetSeconds[9] = {0, 60, 10, 5, 30, 10, 60, 10, 120};
const std::vector<Rational> kT{Rational(3), Rational(-1), Rational(2), Rational(1, 2), Rational(5)};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

using ODE = LinearODE<Rational>;

RatFunQ rf(const std::string& t, const std::string& var = "s") {
  return parse_ratfun<Rational>(t, ParseContext::standard(var));
}
PolyQ cq(const std::string& t) { return parse_constant_poly<Rational>(t, ParseContext::standard()); }
PolyQs qs(const std::string& t, const std::string& var = "s") { return parse_poly<Rational>(t, ParseContext::standard(var)); }
ODE ode(const std::string& t, const std::string& var) {
  ODE L;
  L.var = var;
  L.a = parse_ode<Rational>(t, ParseContext::standard(var));
  return L;
}

const ODE& L1() {
  static const ODE L = ode("y'' + ((17*t-8)/(9*t*(t-1)))*y' + (16/(81*t*(t-1)))*y = 0", "t");
  return L;
}
const ODE& L2() {
  static const ODE L = ode("y'' + ((13*t-4)/(9*t*(t-1)))*y' + (4/(81*t*(t-1)))*y = 0", "t");
  return L;
}
const ODE& L3() {
  static const ODE L = ode("y'' + ((11*t-2)/(9*t*(t-1)))*y' + (1/(81*t*(t-1)))*y = 0", "t");
  return L;
}

const GriffithsDwork<RatFunQ>& sparse() {
  static const GriffithsDwork<RatFunQ> gd(ks::family(ks::Presentation::s_form));
  return gd;
}

ODE section_ode(const std::string& section) {
  const auto& gd = sparse();
  return to_ode(gd.picard_fuchs(gd.make_class(qs(section), 1)));
}

// 1. Picard-Fuchs equation of the section X through the CLI.
Outcome criterion1() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"pf", "--family", "ks", "--section", "X", "--format", "json"}, out, err);
  o.require(code == 0, "pf exit code " + std::to_string(code));
  if (code != 0) return o;
  const auto j = io::Json::parse(out.str());
  o.require(j["order"] == 2, "order " + j["order"].dump());
  if (j["order"] != 2) return o;
  const RatFunQ a0 = rf(j["coefficients"][0].get<std::string>());
  const RatFunQ a1 = rf(j["coefficients"][1].get<std::string>());
  o.require(a0 == rf("16*s^7/(s^9-1)"), "a_0 = " + a0.to_string("s"));
  o.require(a1 == rf("9*s^8/(s^9-1)"), "a_1 = " + a1.to_string("s"));
  const auto loaded = io::picard_fuchs_from_json(j, true);
  o.require(!loaded.certificates.empty(), "no certificates");
  if (o.pass) o.detail = "a_0 = 16s^7/(s^9-1), a_1 = 9s^8/(s^9-1), " + std::to_string(loaded.certificates.size()) + " certificates re-verified";
  return o;
}

// 2. Hypergeometric descent along t = s^9.
Outcome criterion2() {
  Outcome o;
  o.require(pullback_monomial(L1(), 9) == section_ode("X"), "pullback(L1, 9) != X equation");
  o.require(is_hypergeometric(L1()), "L1 not hypergeometric");
  o.require(pullback_monomial(L2(), 9) == section_ode("Y"), "pullback(L2, 9) != Y equation");
  o.require(pullback_monomial(L3(), 9) == section_ode("Z"), "pullback(L3, 9) != Z equation");
  if (o.pass) o.detail = "X, Y, Z equations are the pullbacks of L1, L2, L3";
  return o;
}

// 3. Riemann scheme of the section-X equation.
Outcome criterion3() {
  Outcome o;
  const auto L = lift_ode(ode("y'' + (9*s^8/(s^9-1))*y' + (16*s^7/(s^9-1))*y = 0", "s"));
  std::vector<std::pair<std::string, NFElem>> pts;
  NFElem w(1);
  for (int i = 1; i <= 9; ++i) {
    w *= zeta9();
    pts.emplace_back("zeta9^" + std::to_string(i), w);
  }
  const auto cols = riemann_scheme(L, pts, true);
  for (std::size_t i = 0; i < 9; ++i)
    o.require(cols[i].exponents.exponents == std::vector<NFElem>{NFElem(0), NFElem(0)}, "exponents at " + cols[i].label);
  o.require(cols[9].exponents.exponents == std::vector<NFElem>{NFElem(4), NFElem(4)}, "exponents at infinity");
  const auto sum = exponent_sum(cols);
  o.require(sum && *sum == NFElem(8), "Fuchs sum");
  o.require(singular_point_count(singular_points(L)) == 10, "extra singular points");
  if (o.pass) o.detail = "{0,0} at the nine ninth roots of unity, {4,4} at infinity, sum 8";
  return o;
}

// 4. Hyperflex and torsion projection at the fixed t-samples.
Outcome criterion4() {
  Outcome o;
  const int expected_total = 12;
  int observed_total = -1;
  for (const auto& t : kT) {
    const std::string at = " at t = " + to_string(t);
    const PolyQ F = ks::family_at(ks::Presentation::t_form, t);
    const auto c = classify_flex(F, ks::q_point());
    o.require(c.kind == FlexKind::hyperflex && c.multiplicity == 4, "Q is " + c.to_string() + at);
    const auto sec = line_section(F, ProjLine<Rational>(Rational(1), Rational(0), Rational(0)));
    int mp = 0, mq = 0;
    for (const auto& [p, m] : sec.points) {
      if (p == ks::p_point()) mp = m;
      if (p == ks::q_point()) mq = m;
    }
    o.require(mp == 3 && mq == 1 && sec.total() == 4, "X = 0 section" + at);
    const auto m = central_projection(F, ks::q_point());
    o.require(m.degree == 3, "degree" + at);
    o.require(fiber_partition(m, m.image(ks::p_point())) == std::vector<int>{3}, "not totally ramified over P" + at);
    o.require(fiber_partition(m, m.image(ks::q_point())) == std::vector<int>{3}, "not totally ramified over Q" + at);
    int simple = 0;
    for (const auto& b : m.branch)
      if (b.partition == std::vector<int>{2, 1}) simple += b.points();
    o.require(simple == 6, std::to_string(simple) + " simple branch points" + at);
    observed_total = m.total_ramification();
    o.require(observed_total == expected_total,
              "sum(e-1) = " + std::to_string(observed_total) + ", expected " + std::to_string(expected_total) + at);
  }
  if (o.pass) o.detail = "hyperflex(4), 3P + Q, 2 triple + 6 simple, sum(e-1) = 12";
  return o;
}

// 5. Cusp equations and smoothness pattern.
Outcome criterion5() {
  Outcome o;
  const auto q = exact_quotient(ks::f_inf(), cq("X + Y + Z"));
  o.require(q.divisible, "X + Y + Z does not divide F_inf");
  o.require(q.quotient == cq("X^3 - 4*X^2*Y + 5*X^2*Z + X*Y^2 - 7*X*Y*Z + X*Z^2 + 3*Y^3"), "cubic factor");
  o.require(!is_smooth(ks::f1()), "F_1 smooth");
  o.require(!is_smooth(ks::f_inf()), "F_inf smooth");
  o.require(is_smooth(ks::f0()), "F_0 singular");
  o.require(is_smooth(ks::family(ks::Presentation::s_form)), "generic s-fiber singular");
  for (const auto& t : kT) o.require(is_smooth(ks::family_at(ks::Presentation::t_form, t)), "fiber at t = " + to_string(t));
  if (o.pass) o.detail = "F_inf = (X+Y+Z) * cubic; F_1, F_inf singular; F_0 and generic fibers smooth";
  return o;
}

// 6. Differential relations at the cusps and the orbifold point.
Outcome criterion6() {
  Outcome o;
  for (auto conv : {GaloisConvention::fix_zeta3, GaloisConvention::full}) {
    for (auto cusp : {ks::Cusp::reducible, ks::Cusp::irreducible}) {
      const auto r = ks::verify_cusp_relation(cusp, conv);
      for (const auto& c : r.checks) o.require(c.pass, r.name + ": " + c.name);
    }
  }
  const auto orb = ks::verify_orbifold_relation();
  for (const auto& c : orb.checks) o.require(c.pass, "orbifold: " + c.name);
  if (o.pass) o.detail = "both cusps under both conventions, (B2,C2,D2) rejected, orbifold relation in the tower";
  return o;
}

// 7. Family structure.
Outcome criterion7() {
  Outcome o;
  o.require(ks::verify_descent().pass(), "descent");
  o.require(ks::verify_symmetry(4).pass(), "symmetry with lambda = zeta9^4");
  const std::vector<std::pair<Monomial, int>> table{
      {{4, 0, 0}, 9}, {{3, 1, 0}, 7}, {{3, 0, 1}, 6}, {{2, 2, 0}, 5},  {{2, 1, 1}, 4},
      {{2, 0, 2}, 3}, {{1, 3, 0}, 3}, {{1, 2, 1}, 2}, {{1, 1, 2}, 1},  {{1, 0, 3}, 0},
      {{0, 4, 0}, 1}, {{0, 3, 1}, 0}, {{0, 2, 2}, -1}, {{0, 1, 3}, -1}, {{0, 0, 4}, -1}};
  const auto got = ks::degree_table();
  o.require(got.size() == 15, "table size " + std::to_string(got.size()));
  for (std::size_t i = 0; i < table.size() && i < got.size(); ++i) {
    const auto& [m, d] = table[i];
    const bool ok = got[i].ijk == m && got[i].pass && (d < 0 ? !got[i].degree : got[i].degree == d);
    o.require(ok, "table entry " + std::to_string(i));
  }
  o.require(ks::reconstruct_family(ks::f_inf(), ks::f1()) == ks::family(ks::Presentation::s_form), "reconstruction");
  if (o.pass) o.detail = "descent, symmetry, 15-entry degree table, reconstruction";
  return o;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Constant term of ((X^3+Y^3+Z^3)/(XYZ))^n by brute-force multinomial count.
Rational hesse_ct(int n) {
  Rational s(0);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      if (3 * a == n && 3 * b == n && 3 * c == n) s += factorial(n) / (factorial(a) * factorial(b) * factorial(c));
    }
  return s;
}

// 8. Method-level property suites.
Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_form = [&](int deg) {
    PolyQ p;
    for (const auto& m : monomials_of_degree(3, deg)) p.add_term(m, Rational(coef(rng)));
    return p;
  };

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> phase;
  auto mark = [&] {
    phase.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  // (a) 100 certified memberships on random smooth quartics.
  int memberships = 0;
  while (memberships < 100) {
    const PolyQ F = random_form(4);
    if (!is_smooth(F)) continue;
    const JacobianRing<Rational> ring(F);
    for (int k = 0; k < 10; ++k) {
      const int deg = 3 + k % 5;
      PolyQ target;
      for (std::size_t i = 0; i < 3; ++i) target += random_form(deg - 3) * F.partial_derivative(i);
      const auto m = graded_membership(target, ring);
      o.require(m.member && m.certificate && m.certificate->verify() && m.certificate->target == target,
                "membership " + std::to_string(memberships));
      ++memberships;
    }
  }

  mark();
  // (b) Path independence on 50 random classes.
  const auto& gd = sparse();
  for (int trial = 0; trial < 50; ++trial) {
    const int pole = trial % 10 == 9 ? 2 : 1;
    PolyQs p;
    for (const auto& m : monomials_of_degree(3, gd.numerator_degree(pole))) {
      if (coef(rng) > 1) continue;
      p.add_term(m, RatFunQ(UPoly<Rational>(std::vector<Rational>{Rational(coef(rng)), Rational(coef(rng))})));
    }
    const auto w = gd.make_class(p, pole);
    std::vector<ReductionStep<RatFunQ>> log;
    const auto direct = gd.normal_form(gd.gauss_manin_derivative(w), &log);
    o.require(direct == gd.derivative_of_normal_form(gd.normal_form(w)), "path dependence at class " + std::to_string(trial));
    for (const auto& s : log) o.require(s.certificate.verify(), "reduction certificate at class " + std::to_string(trial));
  }

  mark();
  // (c) Frobenius residuals at every rational singular place of every computed equation.
  const int N = 20;
  int series = 0;
  std::vector<ODE> odes{L1(), L2(), L3(), section_ode("X"), section_ode("Y"), section_ode("Z")};
  for (const auto& L : odes) {
    for (const auto& place : singular_points(L)) {
      if (!place.infinity && place.poly.degree() != 1) continue;
      const auto e = local_exponents(L, place);
      if (!e.split) continue;
      std::vector<Rational> rhos;
      for (const auto& r : e.exponents)
        if (std::find(rhos.begin(), rhos.end(), r) == rhos.end()) rhos.push_back(r);
      for (const auto& rho : rhos) {
        try {
          const auto f = place.infinity ? frobenius_series_at_infinity(L, rho, N)
                                        : frobenius_series(L, Rational(-place.poly.coeff(0)), rho, N);
          o.require(f.verified && f.residual_valuation > N, "residual of series at " + place.to_string(L.var));
          ++series;
        } catch (const ResonantExponent&) {
          // The other exponent differs by a positive integer; its series is logarithmic.
        }
      }
    }
  }
  o.require(series >= 12, "only " + std::to_string(series) + " series computed");

  mark();
  // (d) Hesse cubic period against the constant-term oracle.
  const GriffithsDwork<RatFunQ> hesse(qs("X^3 + Y^3 + Z^3 - 3*s*X*Y*Z"));
  const auto H = to_ode(hesse.picard_fuchs(hesse.make_class(qs("1"), 1)));
  const auto f = frobenius_series_at_infinity(H, Rational(1), 27);
  Rational pow3(1);
  int matched = 0;
  for (int n = 0; n <= 27; ++n) {
    const Rational expect = hesse_ct(n) / pow3;
    o.require(f.coeffs[static_cast<std::size_t>(n)] == expect, "Hesse coefficient " + std::to_string(n));
    if (expect != 0) ++matched;
    pow3 *= 3;
  }
  o.require(matched == 10, std::to_string(matched) + " nonzero Hesse coefficients");
  mark();
  std::ostringstream ph;
  ph.setf(std::ios::fixed);
  ph.precision(1);
  ph << " (phases at";
  for (double t : phase) ph << " " << t << "s";
  ph << ")";
  if (o.pass)
    o.detail = "100 memberships, 50 classes, " + std::to_string(series) + " Frobenius series, 10 Hesse coefficients";
  o.detail += ph.str();
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> c{
      {"Picard-Fuchs reproduction", criterion1}, {"hypergeometric descent", criterion2},
      {"Riemann scheme", criterion3},            {"hyperflex and torsion projection", criterion4},
      {"cusp equations", criterion5},            {"differential relations", criterion6},
      {"family structure", criterion7},          {"property suites", criterion8}};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 8; ++i) which.push_back(i);
  bool all = true;
  for (int k : which) {
    if (k < 1 || k > 8) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    const auto& [title, fn] = criteria()[static_cast<std::size_t>(k - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double budget = kBudgetSeconds[k];
    if (secs > budget) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    std::ostringstream time;
    time.setf(std::ios::fixed);
    time.precision(2);
    time << secs << "s/" << budget << "s";
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << time.str()
              << "]  " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
