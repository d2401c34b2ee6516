#include "test_support.hpp"

#include "gdpf/ratfun.hpp"

#include <random>

using namespace gdpf;

namespace {

NFElem v() { return NFElem::generator(cubic_field()); }

NFElem random_element(const FieldHandle& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<NFElem> c;
  for (int i = 0; i < f->degree(); ++i) {
    Rational q(d(rng), 1 + (d(rng) + 9) % 4);
    q.canonicalize();
    c.emplace_back(q);
  }
  return NFElem::from_coords(f, c);
}

}  // namespace

TEST_CASE("cubic field arithmetic") {
  const NFElem x = v();
  CHECK(x * (x * x) == 3 * x - 1);
  CHECK((-(x * x) - x) * (x + 1) == -2 * x * x - 4 * x + 1);
  CHECK(cubic_field()->degree() == 3);
  CHECK(cubic_field()->irreducibility_verified());
}

TEST_CASE("cyclotomic field") {
  const NFElem z3 = zeta3();
  CHECK(z3 * z3 * z3 == NFElem(1));
  CHECK(z3 != NFElem(1));
  const NFElem w = v_in_cyclotomic();
  CHECK(w * w * w - 3 * w + 1 == NFElem(0));
  CHECK(zeta9().pow(9) == NFElem(1));
  CHECK(zeta9().pow(-1) == zeta9().pow(8));
}

TEST_CASE("nf_create degree one collapses to the base") {
  FieldHandle f = nf_create({NFElem(-5), NFElem(1)}, nullptr, "w");
  CHECK(f == nullptr);
}

TEST_CASE("nf_create rejects reducible polynomials with a witness") {
  // (x - 2)(x^2 + 1)
  bool thrown = false;
  try {
    nf_create({NFElem(-2), NFElem(1), NFElem(-2), NFElem(1)}, nullptr, "w");
  } catch (const ReducibleMinpoly& e) {
    thrown = true;
    CHECK(e.factor().size() >= 2);
  }
  CHECK(thrown);
  // (x^2 + x + 1)(x^2 - 2), no rational roots
  CHECK_THROWS_AS(nf_create({NFElem(-2), NFElem(-2), NFElem(-1), NFElem(1), NFElem(1)}, nullptr, "w"),
                  ReducibleMinpoly);
}

TEST_CASE("orbifold tower is verified irreducible") {
  const FieldHandle& t = orbifold_tower();
  CHECK(t->irreducibility_verified());
  CHECK(t->absolute_degree() == 18);
  const NFElem u = NFElem::generator(t);
  CHECK(u * u * u == lift(zeta3(), t) / 3);
}

TEST_CASE("galois conjugates of v") {
  const NFElem x = v();
  for (auto c : {GaloisConvention::full, GaloisConvention::fix_zeta3}) {
    auto g = galois_conjugates(x, c);
    CHECK(g[0] == x);
    CHECK(g[1] == 2 - x - x * x);
    CHECK(g[2] == x * x - 2);
    CHECK(g[0] + g[1] + g[2] == NFElem(0));
    CHECK(g[0] * g[1] * g[2] == NFElem(-1));
  }
  auto r = galois_conjugates(NFElem(Rational(7, 3)));
  CHECK(r[1] == NFElem(Rational(7, 3)));
}

TEST_CASE("galois conjugation of r_1 and of zeta3") {
  const NFElem x = v();
  const NFElem r1 = -(x * x) - x;
  auto g = galois_conjugates(r1);
  for (int i = 0; i < 3; ++i) {
    const NFElem vi = galois_conjugates(x)[static_cast<std::size_t>(i)];
    CHECK(g[static_cast<std::size_t>(i)] == -(vi * vi) - vi);
  }
  CHECK(galois_conjugates(zeta3(), GaloisConvention::fix_zeta3)[1] == zeta3());
  CHECK(galois_conjugates(zeta3(), GaloisConvention::full)[2] == zeta3() * zeta3());
  // Embedding Q(v) into Q(zeta9) commutes with conjugation.
  auto gc = galois_conjugates(cubic_to_cyclotomic(r1), GaloisConvention::full);
  CHECK(gc[1] == cubic_to_cyclotomic(g[1]));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (const FieldHandle& f : {cubic_field(), cyclotomic9()}) {
    for (int i = 0; i < 40; ++i) {
      const NFElem a = random_element(f, rng);
      const NFElem b = random_element(f, rng);
      const NFElem c = random_element(f, rng);
      CHECK((a + b) - b == a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == NFElem(1));
      auto ga = galois_conjugates(a, GaloisConvention::full);
      auto gb = galois_conjugates(b, GaloisConvention::full);
      auto gab = galois_conjugates(a * b, GaloisConvention::full);
      auto gs = galois_conjugates(a + b, GaloisConvention::full);
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(gab[k] == ga[k] * gb[k]);
        CHECK(gs[k] == ga[k] + gb[k]);
      }
    }
  }
  CHECK_THROWS(NFElem(0).inverse());
  CHECK_THROWS(NFElem::from_coords(cubic_field(), {NFElem(0)}).inverse());
}

TEST_CASE("rational function normalization") {
  using P = UPoly<Rational>;
  const P s = P::x();
  const P p = s * s - 1;
  const P q = s * s * s + 2;
  const RatFunQ f(p, q);
  const P m = s * s + s + Rational(1, 3);
  CHECK(RatFunQ(p * m, q * m) == f);
  CHECK(RatFunQ(p * Rational(3), q * Rational(3)) == f);
  CHECK(RatFunQ(s - 1, s * s - 1) == RatFunQ(P(1), s + 1));
  CHECK(f * f.inverse() == RatFunQ(1));
  CHECK((f + f) - f == f);
  CHECK(RatFunQ(s).derivative() == RatFunQ(1));
  CHECK(RatFunQ(P(1), s).derivative() == RatFunQ(P(-1), s * s));
  CHECK(f.eval(Rational(2)) == Rational(3, 10));
}

TEST_CASE("rational roots") {
  using P = UPoly<Rational>;
  const P s = P::x();
  auto r = rational_roots((s - Rational(1, 2)) * (s - Rational(1, 2)) * (s + 3) * (s * s + 1));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::make_pair(Rational(-3), 1));
  CHECK(r[1] == std::make_pair(Rational(1, 2), 2));
}
