#include "test_support.hpp"

#include "gdpf/jacobian.hpp"
#include "gdpf/parser.hpp"
#include "gdpf/plane_geometry.hpp"

#include <random>

using namespace gdpf;

namespace {

using Pt = ProjPoint<Rational>;
using Ln = ProjLine<Rational>;

const char* kEq11 =
    "X^4 + t*(X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2 + 4*X*Y^3"
    " - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z)";

PolyQ q(const std::string& t) { return parse_constant_poly<Rational>(t, ParseContext::standard()); }

PolyQ eq11(const Rational& t) { return specialize(parse_poly<Rational>(kEq11, ParseContext::standard("t")), t); }

Pt pt(long a, long b, long c) { return Pt(Rational(a), Rational(b), Rational(c)); }
Ln ln(long a, long b, long c) { return Ln(Rational(a), Rational(b), Rational(c)); }

const std::vector<Rational> kSamples{Rational(3), Rational(-1), Rational(2), Rational(1, 2), Rational(5)};

}  // namespace

TEST_CASE("points and lines") {
  CHECK(pt(1, 2, 3) == pt(2, 4, 6));
  CHECK(pt(0, 2, -2).canonical().x == std::array<Rational, 3>{0, 1, -1});
  CHECK(pt(0, 1, -1).to_string() == "(0:1:-1)");
  CHECK_THROWS_AS(pt(0, 0, 0), std::invalid_argument);
  CHECK(line_through(pt(0, 0, 1), pt(0, 1, -1)) == ln(1, 0, 0));
  CHECK(meet(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0, 1));
  CHECK(ln(1, 0, 0).to_string() == "X = 0");
}

TEST_CASE("contact orders with the line X = 0") {
  const PolyQ F = eq11(Rational(3));
  // Restriction to X = 0 is 9 Y^3 (Y + Z).
  CHECK(specialize(parse_poly<Rational>(kEq11, ParseContext::standard("t")), Rational(3))
            .eval(std::vector<Rational>{0, 2, 5}) == Rational(9 * 8 * 7));
  CHECK(intersection_multiplicity(F, ln(1, 0, 0), pt(0, 0, 1)).value == 3);
  CHECK(intersection_multiplicity(F, ln(1, 0, 0), pt(0, 1, -1)).value == 1);
  CHECK(intersection_multiplicity(F, ln(1, 0, 0), pt(0, 1, 0)).value == 0);
  CHECK_THROWS_AS(intersection_multiplicity(F, ln(1, 0, 0), pt(1, 0, 0)), std::invalid_argument);

  const auto sec = line_section(F, ln(1, 0, 0));
  CHECK_FALSE(sec.component);
  CHECK(sec.total() == 4);
  int m_p = 0;
  int m_q = 0;
  for (const auto& [p, m] : sec.points) {
    if (p == pt(0, 0, 1)) m_p = m;
    if (p == pt(0, 1, -1)) m_q = m;
  }
  CHECK(m_p == 3);
  CHECK(m_q == 1);
}

TEST_CASE("a line inside the curve") {
  const PolyQ bracket = q(
      "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2 + 4*X*Y^3"
      " - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z");
  const auto m = intersection_multiplicity(bracket, ln(1, 1, 1), pt(1, -1, 0));
  CHECK(m.component);
  CHECK(m.to_string() == "component");
  CHECK(intersection_multiplicity(bracket, ln(1, 1, 1), pt(0, 1, -1)).component);
  CHECK(line_section(bracket, ln(1, 1, 1)).component);
}

TEST_CASE("tangent lines") {
  const PolyQ F0 = q("X^4 + X*Z^3 + 3*Y^3*Z");
  // Partials of F0 at (0:1:0) are (0, 0, 3).
  CHECK(tangent_line(F0, pt(0, 1, 0)) == ln(0, 0, 1));
  CHECK_THROWS_AS(tangent_line(F0, pt(1, 1, 1)), std::invalid_argument);
  const PolyQ node = q("Y^2*Z - X^3 - X^2*Z");
  CHECK_THROWS_AS(tangent_line(node, pt(0, 0, 1)), SingularPoint);

  const PolyQ conic = q("X^2 + Y^2 - Z^2");
  for (const auto& p : {pt(1, 0, 1), pt(3, 4, 5), pt(-5, 12, 13), pt(0, 1, 1)}) {
    const auto t = tangent_line(conic, p);
    CHECK(t.contains(p));
    CHECK(intersection_multiplicity(conic, t, p).value == 2);
  }

  for (const auto& t : kSamples) {
    const PolyQ F = eq11(t);
    const auto tq = tangent_line(F, pt(0, 1, -1));
    CHECK(intersection_multiplicity(F, tq, pt(0, 1, -1)).value == 4);
    const auto tp = tangent_line(F, pt(0, 0, 1));
    CHECK(tp == ln(1, 0, 0));
    CHECK(tp.contains(pt(0, 1, -1)));
  }
}

TEST_CASE("flex classification") {
  for (const auto& t : kSamples) {
    const PolyQ F = eq11(t);
    const auto c = classify_flex(F, pt(0, 1, -1));
    CHECK(c.kind == FlexKind::hyperflex);
    CHECK(c.multiplicity == 4);
    CHECK(c.to_string() == "hyperflex(4)");
    const auto d = classify_flex(F, pt(0, 0, 1));
    CHECK(d.kind == FlexKind::flex);
    CHECK(d.multiplicity == 3);
  }
  // F = X^4 + Y^4 - Z^4 + X*Y*Z^2 at (1:0:1): the tangent is 4X + Y - 4Z = 0,
  // and along (1, 4 tau, 1 + tau) F = 2 tau^2 + 255 tau^4 by hand.
  const PolyQ G = q("X^4 + Y^4 - Z^4 + X*Y*Z^2");
  CHECK(tangent_line(G, pt(1, 0, 1)) == ln(4, 1, -4));
  CHECK(restrict_to_line(G, pt(1, 0, 1), pt(0, 4, 1)) == std::vector<Rational>{0, 0, 2, 0, 255});
  const auto c = classify_flex(G, pt(1, 0, 1));
  CHECK(c.kind == FlexKind::ordinary);
  CHECK(c.multiplicity == 2);
}

TEST_CASE("Bezout on random lines") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const PolyQ F = eq11(kSamples[static_cast<std::size_t>(trial) % kSamples.size()]);
    int a = d(rng), b = d(rng), c = d(rng);
    if (a == 0 && b == 0 && c == 0) a = 1;
    const auto sec = line_section(F, ln(a, b, c));
    REQUIRE_FALSE(sec.component);
    CHECK(sec.total() == 4);
    for (const auto& [p, m] : sec.points) CHECK(intersection_multiplicity(F, ln(a, b, c), p).value == m);
  }
}

TEST_CASE("singularity verification") {
  CHECK(verify_singular(q("Y^2*Z - X^3 - X^2*Z"), pt(0, 0, 1)));
  CHECK_FALSE(verify_singular(q("Y^2*Z - X^3 - X^2*Z"), pt(0, 1, 0)));
  const PolyQ F0 = q("X^4 + X*Z^3 + 3*Y^3*Z");
  for (const auto& p : {pt(0, 1, 0), pt(0, 0, 1), pt(1, 0, -1)}) {
    CHECK(on_curve(F0, p));
    CHECK_FALSE(verify_singular(F0, p));
  }
  CHECK_FALSE(verify_singular(F0, pt(1, 1, 1)));
}

TEST_CASE("torsion map: central projection from the hyperflex") {
  for (const auto& t : kSamples) {
    const PolyQ F = eq11(t);
    const auto m = central_projection(F, pt(0, 1, -1));
    CHECK(m.degree == 3);
    CHECK(m.l1 == ln(1, 0, 0));
    CHECK(m.l2 == ln(0, 1, 1));
    const auto ip = m.image(pt(0, 0, 1));
    const auto iq = m.image(pt(0, 1, -1));
    CHECK(fiber_partition(m, ip) == std::vector<int>{3});
    CHECK(fiber_partition(m, iq) == std::vector<int>{3});
    const auto bp = m.branch_at(ip);
    const auto bq = m.branch_at(iq);
    REQUIRE(bp);
    REQUIRE(bq);
    CHECK(bp->partition == std::vector<int>{3});
    CHECK(bq->partition == std::vector<int>{3});
    int simple = 0;
    int triple = 0;
    for (const auto& b : m.branch) {
      if (b.partition == std::vector<int>{2, 1}) simple += b.points();
      if (b.partition == std::vector<int>{3}) triple += b.points();
    }
    CHECK(simple == 6);
    CHECK(triple == 2);
    // Riemann-Hurwitz: 2*3 - 2 = 3*(2*0 - 2) + sum(e - 1).
    CHECK(m.total_ramification() == 10);
  }
}

TEST_CASE("central projection from a generic point against a Sylvester resultant") {
  // A quartic through (1:2:3) with random coefficients.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  PolyQ F;
  for (const auto& mono : monomials_of_degree(3, 4)) F.add_term(mono, Rational(d(rng)));
  const Pt c = pt(1, 2, 3);
  F.add_term({4, 0, 0}, -F.eval(c.coords()));
  REQUIRE(on_curve(F, c));
  REQUIRE(is_smooth(F));
  const auto m = central_projection(F, c);
  CHECK(m.total_ramification() == 10);

  // Independent cubic: interpolate x -> F(x c + alpha p1 + p2) at x = 0..4,
  // drop the vanishing x^4 term, take Res(G, G') by a 5x5 determinant.
  auto det = [](std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational r(1);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t piv = i;
      while (piv < n && a[piv][i] == 0) ++piv;
      if (piv == n) return Rational(0);
      if (piv != i) {
        std::swap(a[piv], a[i]);
        r = -r;
      }
      r *= a[i][i];
      for (std::size_t k = i + 1; k < n; ++k) {
        const Rational f = a[k][i] / a[i][i];
        for (std::size_t j = i; j < n; ++j) a[k][j] -= f * a[i][j];
      }
    }
    return r;
  };
  for (int alpha = -6; alpha <= 6; ++alpha) {
    std::vector<Rational> ys;
    for (int x = 0; x <= 4; ++x) {
      std::vector<Rational> p(3);
      for (std::size_t j = 0; j < 3; ++j) p[j] = c.x[j] * x + m.p1.x[j] * alpha + m.p2.x[j];
      ys.push_back(F.eval(p));
    }
    // Newton forward differences to monomial coefficients.
    std::vector<Rational> co(5, Rational(0));
    {
      std::vector<std::vector<Rational>> a(5, std::vector<Rational>(6));
      for (int i = 0; i < 5; ++i) {
        Rational pw(1);
        for (int j = 0; j < 5; ++j) {
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw;
          pw *= i;
        }
        a[static_cast<std::size_t>(i)][5] = ys[static_cast<std::size_t>(i)];
      }
      for (std::size_t i = 0; i < 5; ++i) {
        std::size_t piv = i;
        while (a[piv][i] == 0) ++piv;
        std::swap(a[piv], a[i]);
        for (std::size_t k = 0; k < 5; ++k) {
          if (k == i) continue;
          const Rational f = a[k][i] / a[i][i];
          for (std::size_t j = i; j < 6; ++j) a[k][j] -= f * a[i][j];
        }
      }
      for (std::size_t i = 0; i < 5; ++i) co[i] = a[i][5] / a[i][i];
    }
    REQUIRE(co[4] == 0);
    const Rational A = co[3], B = co[2], C = co[1], D = co[0];
    // Sylvester matrix of A x^3 + B x^2 + C x + D and 3A x^2 + 2B x + C.
    const std::vector<std::vector<Rational>> syl{{A, B, C, D, 0},
                                                 {0, A, B, C, D},
                                                 {3 * A, 2 * B, C, 0, 0},
                                                 {0, 3 * A, 2 * B, C, 0},
                                                 {0, 0, 3 * A, 2 * B, C}};
    const Rational res = det(syl);
    const Rational disc = m.discriminant.eval(Rational(alpha));
    if (res == 0) {
      CHECK(disc == 0);
      continue;
    }
    // Res(G, G') = -A * disc(G) for a cubic.
    CHECK(disc * (-A) == res);
  }
  // Generic: ten distinct simple branch points.
  CHECK(m.discriminant.degree() == 10);
  CHECK(squarefree_decomposition(m.discriminant).size() == 1);
  for (const auto& b : m.branch) CHECK(b.partition == std::vector<int>{2, 1});
}

TEST_CASE("central projection rejects bad centers") {
  const PolyQ F = eq11(Rational(3));
  CHECK_THROWS_AS(central_projection(F, pt(1, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(central_projection(q("Y^2*Z^2 - X^3*Z - X^2*Z^2"), pt(0, 0, 1)), SingularPoint);
}
