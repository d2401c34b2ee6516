#include "test_support.hpp"

#include "gdpf/parser.hpp"

#include <random>

using namespace gdpf;

namespace {

const char* kSpar =
    "(s^9+1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4) + X*Z^3 + 3*Y^3*Z";

PolyQ q(const std::string& t) { return parse_constant_poly<Rational>(t, ParseContext::standard()); }
PolyQs qs(const std::string& t) { return parse_poly<Rational>(t, ParseContext::standard()); }

PolyQ random_poly(std::mt19937& rng, int deg, int terms) {
  std::uniform_int_distribution<int> c(-5, 5);
  const auto monos = monomials_of_degree(3, deg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  PolyQ p;
  for (int i = 0; i < terms; ++i) p.add_term(monos[pick(rng)], Rational(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("monomial enumeration is grlex descending") {
  auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == Monomial{2, 0, 0});
  CHECK(m[1] == Monomial{1, 1, 0});
  CHECK(m.back() == Monomial{0, 0, 2});
  CHECK(monomials_of_degree(3, 9).size() == 55);
}

TEST_CASE("partial derivatives") {
  const PolyQ f0 = q("X^4 + X*Z^3 + 3*Y^3*Z");
  CHECK(f0.partial_derivative("X") == q("4*X^3 + Z^3"));
  CHECK(q("7").partial_derivative("X").is_zero());
  CHECK_THROWS_AS(f0.partial_derivative("W"), std::invalid_argument);
  const PolyQs f = qs(kSpar);
  PolyQs euler = f.partial_derivative(0) * PolyQs::variable(0) + f.partial_derivative(1) * PolyQs::variable(1) +
                 f.partial_derivative(2) * PolyQs::variable(2);
  CHECK(euler == f * RatFunQ(4));
}

TEST_CASE("linear substitution") {
  const PolyQs f = qs(kSpar);
  const RatFunQ s = RatFunQ::variable();
  const PolyQs descended = f.substitute_linear(LinearSubstitution<RatFunQ>::diagonal({RatFunQ(1), s * s, s * s * s}));
  const PolyQs ft = compose_parameter(
      qs("X^4 + s*(X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2 + 4*X*Y^3"
         " - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z)"),
      RatFunQ(UPoly<Rational>::monomial(Rational(1), 9)));
  CHECK(descended == ft);
  CHECK(f.substitute_linear(LinearSubstitution<RatFunQ>::identity(3)) == f);
  CHECK_THROWS(f.substitute_linear(LinearSubstitution<RatFunQ>::identity(2)));
  // A non-diagonal change of variables preserves the degree.
  LinearSubstitution<Rational> a = LinearSubstitution<Rational>::identity(3);
  a.m[0][1] = Rational(2);
  a.m[2][0] = Rational(-1);
  const PolyQ g = q("X^4 + X*Z^3 + 3*Y^3*Z").substitute_linear(a);
  CHECK(g.is_homogeneous());
  CHECK(g.degree() == 4);
  CHECK(g.eval(std::vector<Rational>{Rational(1), Rational(2), Rational(3)}) ==
        q("X^4 + X*Z^3 + 3*Y^3*Z").eval(std::vector<Rational>{Rational(5), Rational(2), Rational(2)}));
}

TEST_CASE("exact quotient") {
  const PolyQ finf = q(
      "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2 + 4*X*Y^3 - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3"
      " + 3*Y^4 + 3*Y^3*Z");
  auto r = exact_quotient(finf, q("X + Y + Z"));
  CHECK(r.divisible);
  CHECK(r.quotient == q("X^3 - 4*X^2*Y + 5*X^2*Z + X*Y^2 - 7*X*Y*Z + X*Z^2 + 3*Y^3"));
  auto one = exact_quotient(finf, q("1"));
  CHECK(one.divisible);
  CHECK(one.quotient == finf);
  auto no = exact_quotient(q("X^4 + X*Z^3 + 3*Y^3*Z"), q("X + Y + Z"));
  CHECK_FALSE(no.divisible);
  CHECK_FALSE(no.remainder.is_zero());
  CHECK_THROWS(exact_quotient(finf, PolyQ()));
}

TEST_CASE("coefficient extraction") {
  const PolyQs f = qs(kSpar);
  using P = UPoly<Rational>;
  CHECK(coefficient_extract(f, {4, 0, 0}) == RatFunQ(P::monomial(Rational(1), 9) + P(1)));
  CHECK(coefficient_extract(f, {0, 0, 4}).is_zero());
  CHECK(coefficient_extract(f, {3, 1, 0}) == RatFunQ(P::monomial(Rational(-3), 7)));
}

TEST_CASE("ring axioms and quotient round trip on random samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const PolyQ a = random_poly(rng, 3, 5);
    const PolyQ b = random_poly(rng, 2, 4);
    const PolyQ c = random_poly(rng, 2, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) {
      auto r = exact_quotient(a * b, b);
      CHECK(r.divisible);
      CHECK(r.quotient * b == a * b);
    }
    CHECK((a * b).is_homogeneous());
  }
}

TEST_CASE("printer and parser round trip") {
  const ParseContext ctx = ParseContext::standard();
  const PolyQs f = qs(kSpar);
  CHECK(qs(f.to_string()) == f);
  const PolyQs g = qs("(9*s^8)/(s^9 - 1)*X^5 - 1/3*Y*Z^4 + (s + 2)/(s^2 + 1)*Z^5");
  CHECK(qs(g.to_string()) == g);
  const PolyNFs h = parse_poly<NFElem>("zeta9^4*X^4 - (v^2 + 1/2)*s*Y^2*Z^2 + u*Z^4", ctx);
  CHECK(parse_poly<NFElem>(h.to_string(), ctx) == h);
  CHECK(qs("-X^2") == qs("-(X^2)"));
  CHECK(qs("2^3*X") == qs("8*X"));
  CHECK(qs("s^(-1)*X") == qs("X/s"));
}

TEST_CASE("parser errors carry spans and expectations") {
  const ParseContext ctx = ParseContext::standard();
  try {
    parse_poly<Rational>("X + * Y", ctx);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().column == 5);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse_poly<Rational>("X +\n  W", ctx);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 3);
  }
  CHECK_THROWS_AS(parse_poly<Rational>("X/Y", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly<Rational>("zeta9*X", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly<Rational>("(X + 1", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly<Rational>("X $ Y", ctx), ParseError);
}

TEST_CASE("points, scalars and field definitions") {
  ParseContext ctx = ParseContext::standard();
  auto p = parse_point<Rational>("(0:1:-1)", ctx);
  CHECK(p[0] == 0);
  CHECK(p[1] == 1);
  CHECK(p[2] == -1);
  CHECK_THROWS_AS(parse_point<Rational>("(0:0:0)", ctx), ParseError);
  CHECK_THROWS_AS(parse_point<Rational>("(0:1)", ctx), ParseError);
  CHECK(parse_scalar<NFElem>("v^3", ctx) == parse_scalar<NFElem>("3*v - 1", ctx));
  FieldHandle f = parse_field_definition("field Qw = Q[w]/(w^3 - 3*w + 1)", ctx);
  REQUIRE(f);
  CHECK(f->degree() == 3);
  CHECK(parse_scalar<NFElem>("w^3 - 3*w", ctx) == NFElem(-1));
  FieldHandle g = parse_field_definition("field Qwr = Qw[r]/(r^2 - w)", ctx);
  REQUIRE(g);
  CHECK(g->absolute_degree() == 6);
  CHECK_THROWS_AS(parse_field_definition("field B = Q[b]/(b^2 - 4)", ctx), ParseError);
  CHECK_THROWS_AS(parse_field_definition("field B = K[b]/(b^2 - 4)", ctx), ParseError);
}
