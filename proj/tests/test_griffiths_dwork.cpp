#include "test_support.hpp"

#include "gdpf/griffiths_dwork.hpp"
#include "gdpf/parser.hpp"

#include <random>

using namespace gdpf;

namespace {

using GD = GriffithsDwork<RatFunQ>;

const char* kSpar =
    "(s^9+1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4) + X*Z^3 + 3*Y^3*Z";

PolyQs qs(const std::string& t) { return parse_poly<Rational>(t, ParseContext::standard()); }
RatFunQ rf(const std::string& t) { return parse_ratfun<Rational>(t, ParseContext::standard()); }

const GD& spar() {
  static const GD gd(qs(kSpar));
  return gd;
}

LinearODE<Rational> tode(const std::string& text) {
  LinearODE<Rational> L;
  L.a = parse_ode<Rational>(text, ParseContext::standard("t"));
  return L;
}

NormalForm<RatFunQ> combine(const GD& gd, const std::vector<std::pair<RatFunQ, CohomClass<RatFunQ>>>& terms) {
  NormalForm<RatFunQ> out;
  out.coords.assign(gd.dimension(), RatFunQ(0));
  for (const auto& [c, w] : terms) {
    const auto nf = gd.normal_form(w);
    for (std::size_t i = 0; i < nf.coords.size(); ++i) out.coords[i] += c * nf.coords[i];
  }
  return out;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Constant term of ((X^3+Y^3+Z^3)/(XYZ))^n by summing multinomials over all
/// compositions a+b+c = n.
Rational hesse_constant_term(int n) {
  Rational s(0);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      if (3 * a - n == 0 && 3 * b - n == 0 && 3 * c - n == 0)
        s += factorial(n) / (factorial(a) * factorial(b) * factorial(c));
    }
  return s;
}

}  // namespace

TEST_CASE("Gauss-Manin derivative") {
  const GD& gd = spar();
  const PolyQs F = gd.family();
  const PolyQs Fp = param_derivative(F);
  const auto X = gd.make_class(qs("X"), 1);
  const auto dX = gd.gauss_manin_derivative(X);
  CHECK(dX.pole == 2);
  CHECK(dX.numerator == qs("X") * Fp * RatFunQ(-1));
  const auto X5 = gd.make_class(qs("X^5"), 2);
  const auto dX5 = gd.gauss_manin_derivative(X5);
  CHECK(dX5.pole == 3);
  CHECK(dX5.numerator == qs("X^5") * Fp * RatFunQ(-2));

  const GD fermat(qs("X^4 + Y^4 + Z^4"));
  CHECK(fermat.gauss_manin_derivative(fermat.make_class(qs("X"), 1)).numerator.is_zero());
}

TEST_CASE("degree bookkeeping") {
  const GD& gd = spar();
  CHECK(gd.numerator_degree(1) == 1);
  CHECK(gd.numerator_degree(2) == 5);
  CHECK(gd.numerator_degree(3) == 9);
  CHECK_THROWS_AS(gd.make_class(qs("X^2"), 1), std::logic_error);
  CHECK_THROWS_AS(gd.make_class(qs("X + Y^5"), 2), std::logic_error);
  CHECK_THROWS_AS(gd.make_class(qs("X"), 0), std::logic_error);
  CHECK(gd.dimension() == 6);
  REQUIRE(gd.bases().size() == 2);
  CHECK(gd.bases()[0].monomials == std::vector<Monomial>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(gd.bases()[1].monomials == std::vector<Monomial>{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}});
}

TEST_CASE("normal forms of X and its derivative") {
  const GD& gd = spar();
  const auto X = gd.make_class(qs("X"), 1);
  auto nf = gd.normal_form(X);
  CHECK(nf.coords == std::vector<RatFunQ>{1, 0, 0, 0, 0, 0});
  nf = gd.normal_form(gd.gauss_manin_derivative(X));
  // Degree-5 block: -X F' = (9/s) X^5 modulo J.
  CHECK(nf.coords[3] == rf("9/s"));
  CHECK(nf.coords[4].is_zero());
  CHECK(nf.coords[5].is_zero());
  // The Jacobian part of -X F' feeds back into the X coordinate; it must be
  // the value that makes a0 + a1 c + (X coordinate of D^2) vanish.
  const auto d2 = gd.normal_form(gd.gauss_manin_derivative(gd.gauss_manin_derivative(X)));
  // (1/2)G - F''X = -(81 s^7/(s^9-1)) X^5 modulo J.
  CHECK(d2.coords[3] == rf("-81*s^7/(s^9-1)"));
  CHECK(rf("16*s^7/(s^9-1)") + rf("9*s^8/(s^9-1)") * nf.coords[0] + d2.coords[0] == 0);
  CHECK(nf.coords[0] == rf("-4/s"));
}

TEST_CASE("pole reduction") {
  const GD& gd = spar();
  const PolyQs Fp = param_derivative(gd.family());
  const auto zero = gd.reduce_pole_order(gd.make_class(PolyQs(), 3));
  CHECK(zero.pole == 2);
  CHECK(zero.numerator.is_zero());
  CHECK_THROWS_AS(gd.reduce_pole_order(gd.make_class(qs("X^5"), 2)), NotInJacobian);
  CHECK_THROWS_AS(gd.reduce_pole_order(gd.make_class(qs("X"), 1)), std::invalid_argument);

  // 2 F'^2 X / F^3 -> (1/2) G / F^2 with G the divergence of the cofactors.
  const auto w = gd.make_class(Fp * Fp * qs("X") * RatFunQ(2), 3);
  std::vector<ReductionStep<RatFunQ>> log;
  const auto r = gd.reduce_pole_order(w, &log);
  REQUIRE(log.size() == 1);
  const auto& cert = log[0].certificate;
  CHECK(cert.verify());
  CHECK(cert.target == w.numerator);
  CHECK(r.pole == 2);
  CHECK(r.numerator == GD::divergence(cert) * RatFunQ(Rational(1, 2)));
  CHECK(gd.normal_form(r) == gd.normal_form(w));
}

TEST_CASE("the a0 step: H/F^2 reduces to -(16 s^7/(s^9-1)) X/F") {
  const GD& gd = spar();
  const PolyQs Fp = param_derivative(gd.family());
  const PolyQs Fpp = param_derivative(Fp);
  const RatFunQ a1 = rf("9*s^8/(s^9-1)");
  const auto nf = combine(gd, {{RatFunQ(-1), gd.make_class((Fp * a1 + Fpp) * qs("X"), 2)},
                               {RatFunQ(2), gd.make_class(Fp * Fp * qs("X"), 3)}});
  CHECK(nf.coords == std::vector<RatFunQ>{rf("-16*s^7/(s^9-1)"), 0, 0, 0, 0, 0});
}

TEST_CASE("Picard-Fuchs equations of the three sections") {
  const GD& gd = spar();
  const auto res = gd.picard_fuchs(gd.make_class(qs("X"), 1));
  CHECK(res.order == 2);
  CHECK(res.coefficients == std::vector<RatFunQ>{rf("16*s^7/(s^9-1)"), rf("9*s^8/(s^9-1)")});
  CHECK(res.rank_profile == std::vector<std::size_t>{1, 2, 2});
  CHECK(res.verify_certificates());
  CHECK_FALSE(res.certificates.empty());

  const auto L2 = tode("4/(81*t*(t-1))*y + (13*t-4)/(9*t*(t-1))*y' + y'' = 0");
  const auto L3 = tode("1/(81*t*(t-1))*y + (11*t-2)/(9*t*(t-1))*y' + y'' = 0");
  const auto ry = gd.picard_fuchs(gd.make_class(qs("Y"), 1));
  CHECK(ry.order == 2);
  CHECK(to_ode(ry) == pullback_monomial(L2, 9));
  const auto rz = gd.picard_fuchs(gd.make_class(qs("Z"), 1));
  CHECK(rz.order == 2);
  CHECK(to_ode(rz) == pullback_monomial(L3, 9));
}

TEST_CASE("no relation below the true order") {
  const GD& gd = spar();
  try {
    gd.picard_fuchs(gd.make_class(qs("X"), 1), 1);
    FAIL("expected NoRelationFound");
  } catch (const NoRelationFound& e) {
    CHECK(e.rank_profile() == std::vector<std::size_t>{1, 2});
  }
}

TEST_CASE("constant family gives y' = 0") {
  const GD gd(qs("X^4 + Y^4 + Z^4"));
  const auto res = gd.picard_fuchs(gd.make_class(qs("X"), 1));
  CHECK(res.order == 1);
  CHECK(res.coefficients == std::vector<RatFunQ>{0});
}

TEST_CASE("singular generic fiber is refused") {
  CHECK_THROWS_AS(GD(qs("s*X^4 + Y^4")), SingularCurve);
  CHECK_THROWS_AS(GD(qs("X^2*Y^2 + s*Z^4")), SingularCurve);
}

TEST_CASE("second derivative by two reduction orders") {
  const GD& gd = spar();
  const auto X = gd.make_class(qs("X"), 1);
  const auto d2 = gd.gauss_manin_derivative(gd.gauss_manin_derivative(X));
  const auto direct = gd.normal_form(d2);
  const auto staged = gd.derivative_of_normal_form(gd.normal_form(gd.gauss_manin_derivative(X)));
  CHECK(direct == staged);
  // Only the X and X^5 coordinates are touched.
  for (std::size_t i : {1u, 2u, 4u, 5u}) CHECK(direct.coords[i].is_zero());
}

TEST_CASE("path independence on random classes") {
  const GD& gd = spar();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const int pole = 1 + trial % 2;
    const int deg = gd.numerator_degree(pole);
    PolyQs p;
    for (const auto& m : monomials_of_degree(3, deg)) {
      if (c(rng) > 1) continue;
      RatFunQ coef(UPoly<Rational>(std::vector<Rational>{Rational(c(rng)), Rational(c(rng))}));
      p.add_term(m, coef);
    }
    const auto w = gd.make_class(p, pole);
    std::vector<ReductionStep<RatFunQ>> log;
    const auto direct = gd.normal_form(gd.gauss_manin_derivative(w), &log);
    const auto staged = gd.derivative_of_normal_form(gd.normal_form(w));
    CHECK(direct == staged);
    for (const auto& step : log) CHECK(step.certificate.verify());
  }
}

TEST_CASE("Hesse cubic period series") {
  const GriffithsDwork<RatFunQ> gd(qs("X^3 + Y^3 + Z^3 - 3*s*X*Y*Z"));
  CHECK(gd.dimension() == 2);
  const auto res = gd.picard_fuchs(gd.make_class(qs("1"), 1));
  REQUIRE(res.order == 2);
  const auto L = to_ode(res);
  const auto e = local_exponents_at_infinity(L);
  CHECK(e.exponents == std::vector<Rational>{1, 1});
  // Period in u = 1/s: u * sum_n ct_n (u/3)^n.
  const int N = 30;
  const auto f = frobenius_series_at_infinity(L, Rational(1), N);
  CHECK(f.verified);
  Rational pow3(1);
  for (int n = 0; n <= N; ++n) {
    CHECK(f.coeffs[static_cast<std::size_t>(n)] == hesse_constant_term(n) / pow3);
    pow3 *= 3;
  }
  CHECK(hesse_constant_term(3) == 6);
  CHECK(hesse_constant_term(6) == 90);
}
