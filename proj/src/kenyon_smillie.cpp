#include "gdpf/kenyon_smillie.hpp"

#include "gdpf/jacobian.hpp"
#include "gdpf/parser.hpp"

#include <sstream>

namespace gdpf::ks {

namespace {

const char* kBracket =
    "X^4 - 3*X^3*Y + 6*X^3*Z - 3*X^2*Y^2 - 6*X^2*Y*Z + 6*X^2*Z^2 + 4*X*Y^3"
    " - 6*X*Y^2*Z - 6*X*Y*Z^2 + X*Z^3 + 3*Y^4 + 3*Y^3*Z";

const char* kSparse =
    "(s^9+1)*X^4 - 3*s^7*X^3*Y + 6*s^6*X^3*Z - 3*s^5*X^2*Y^2 - 6*s^4*X^2*Y*Z"
    " + s^3*(6*X^2*Z^2 + 4*X*Y^3) - 6*s^2*X*Y^2*Z + s*(-6*X*Y*Z^2 + 3*Y^4) + X*Z^3 + 3*Y^3*Z";

PolyQ constant_poly(const std::string& text) { return parse_constant_poly<Rational>(text, ParseContext::standard()); }

std::string mono(const Monomial& m) {
  const std::string s = monomial_to_string(m, *xyz_names());
  return s.empty() ? "1" : s;
}

const Monomial kX4{4, 0, 0};

int weight(const Monomial& m) { return 4 * m[0] + 2 * m[1] + m[2] - 7; }

RatFunQ s_power(int k) { return RatFunQ(UPoly<Rational>::monomial(Rational(1), k)); }

NFElem in_v(int a2, int a1, int a0, int den) {
  const NFElem v = v_in_cyclotomic();
  return (v * v * NFElem(a2) + v * NFElem(a1) + NFElem(a0)) / NFElem(den);
}

/// c / (z - a)
RatFunNF simple_pole(const NFElem& c, const NFElem& a) {
  return RatFunNF(UPoly<NFElem>(c), UPoly<NFElem>(std::vector<NFElem>{-a, NFElem(1)}));
}

StableDifferential make_form(std::string component, const NFElem& mu, std::vector<std::pair<NFElem, NFElem>> poles) {
  StableDifferential w{std::move(component), RatFunNF(), {}};
  for (auto& [a, r] : poles) {
    w.form += simple_pole(mu * r, a);
    w.poles.emplace_back(a, mu * r);
  }
  return w;
}

PolyNF lift_nf(const PolyQ& f) {
  return f.map_coefficients<NFElem>([](const Rational& c) { return lift(NFElem(c), cyclotomic9()); });
}

RatFunNF substitute(const PolyQ& f, const std::array<RatFunNF, 3>& w) {
  return lift_nf(f).eval<RatFunNF>({w[0], w[1], w[2]});
}

bool residues_match(const StableDifferential& w, std::string& detail) {
  for (const auto& [a, r] : w.poles) {
    if (residue(w.form, a) != r) {
      detail = "residue mismatch at z = " + to_string(a);
      return false;
    }
  }
  return true;
}

ProjPoint<NFElem> node_point(const std::array<NFElem, 3>& r) { return ProjPoint<NFElem>(r[0], r[1], r[2]); }

}  // namespace

std::string Report::to_string() const {
  std::ostringstream out;
  out << name << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  return out.str();
}

PolyQs family(Presentation p) {
  if (p == Presentation::s_form) return parse_poly<Rational>(kSparse, ParseContext::standard("s"));
  return parse_poly<Rational>(std::string("X^4 + t*(") + kBracket + ")", ParseContext::standard("t"));
}

PolyQ family_at(Presentation p, const Rational& value) { return specialize(family(p), value); }

PolyQ f0() { return constant_poly("X^4 + X*Z^3 + 3*Y^3*Z"); }
PolyQ f1() { return constant_poly(std::string("X^4 + ") + kBracket); }
PolyQ f_inf() { return constant_poly(kBracket); }
PolyQ f_inf_line() { return constant_poly("X + Y + Z"); }
PolyQ f_inf_cubic() { return constant_poly("X^3 - 4*X^2*Y + 5*X^2*Z + X*Y^2 - 7*X*Y*Z + X*Z^2 + 3*Y^3"); }

ProjPoint<Rational> p_point() { return {Rational(0), Rational(0), Rational(1)}; }
ProjPoint<Rational> q_point() { return {Rational(0), Rational(1), Rational(-1)}; }

const std::vector<Rational>& t_samples() {
  static const std::vector<Rational> t{Rational(3), Rational(-1), Rational(2), Rational(1, 2), Rational(5)};
  return t;
}

// -- Descent and symmetry -----------------------------------------------------

Report verify_descent(const PolyQs& s_form, const PolyQs& t_form) {
  Report rep{"descent", {}};
  const RatFunQ s = RatFunQ::variable();
  const PolyQs lhs = s_form.substitute_linear(LinearSubstitution<RatFunQ>::diagonal({RatFunQ(1), s * s, s * s * s}));
  const PolyQs rhs = compose_parameter(t_form, s_power(9));
  std::vector<std::string> bad;
  for (const auto& m : monomials_of_degree(3, 4))
    if (lhs.coeff(m) != rhs.coeff(m))
      bad.push_back(mono(m) + ": " + lhs.coeff(m).to_string("s") + " vs " + rhs.coeff(m).to_string("s"));
  std::string detail;
  for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
  rep.add("F_s(X, s^2 Y, s^3 Z) = F_t at t = s^9", bad.empty(), detail);
  return rep;
}

Report verify_descent() { return verify_descent(family(Presentation::s_form), family(Presentation::t_form)); }

Report verify_symmetry(int lambda_exponent) {
  Report rep{"symmetry", {}};
  const NFElem z = zeta9();
  const PolyNFs f = lift_parametric(family(Presentation::s_form), cyclotomic9());
  const RatFunNF lambda(z.pow(lambda_exponent));
  const RatFunNF s_image(UPoly<NFElem>::monomial(z.pow(2), 1));
  const PolyNFs rhs = compose_parameter(f, s_image).substitute_linear(
      LinearSubstitution<RatFunNF>::diagonal({RatFunNF(z), RatFunNF(z.pow(5)), RatFunNF(z.pow(7))}));
  std::string detail;
  for (const auto& m : monomials_of_degree(3, 4))
    if (lambda * f.coeff(m) != rhs.coeff(m)) detail += (detail.empty() ? "" : ", ") + mono(m);
  rep.add("lambda = zeta9^" + std::to_string(lambda_exponent), detail.empty(),
          detail.empty() ? "" : "mismatch at " + detail);
  // Exponent condition on each monomial: i + 5j + 7k + 2 deg = 4 mod 9.
  std::string expo;
  for (const auto& m : monomials_of_degree(3, 4)) {
    const RatFunQ c = family(Presentation::s_form).coeff(m);
    for (int d = 0; d <= c.num().degree(); ++d) {
      if (c.num().coeff(d) == 0) continue;
      if (((m[0] + 5 * m[1] + 7 * m[2] + 2 * d - lambda_exponent) % 9 + 9) % 9 != 0)
        expo += (expo.empty() ? "" : ", ") + mono(m) + " s^" + std::to_string(d);
    }
  }
  rep.add("i + 5j + 7k + 2 deg = " + std::to_string(lambda_exponent) + " mod 9 on every term", expo.empty(), expo);
  return rep;
}

// -- Degree table and reconstruction ------------------------------------------

std::vector<DegreeEntry> degree_table(const PolyQs& f) {
  std::vector<DegreeEntry> out;
  for (const auto& m : monomials_of_degree(3, 4)) {
    DegreeEntry e;
    e.ijk = m;
    e.weight = weight(m);
    const RatFunQ c = f.coeff(m);
    if (!c.is_zero()) {
      if (!c.is_polynomial()) {
        out.push_back(e);
        continue;
      }
      e.degree = c.num().degree();
      for (int d = 0; d <= c.num().degree(); ++d)
        if (c.num().coeff(d) != 0) ++e.terms;
    }
    if (e.weight < 0) {
      e.shape_ok = !e.degree;
      e.pass = e.shape_ok;
    } else if (m == kX4) {
      e.shape_ok = e.degree && e.terms == 2 && c.num().coeff(0) != 0;
      e.pass = e.shape_ok && *e.degree == e.weight;
    } else {
      e.shape_ok = e.degree && e.terms == 1;
      e.pass = e.shape_ok && *e.degree == e.weight;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<DegreeEntry> degree_table() { return degree_table(family(Presentation::s_form)); }

PolyQs reconstruct_family(const PolyQ& f_infinity, const PolyQ& f_one) {
  PolyQs out;
  for (const auto& m : monomials_of_degree(3, 4)) {
    const Rational alpha = f_infinity.coeff(m);
    const Rational one = f_one.coeff(m);
    const int w = weight(m);
    if (w < 0) {
      if (alpha != 0 || one != 0)
        throw InconsistentCusps("coefficient of " + mono(m) + " must vanish on both cusps", m);
      continue;
    }
    if (m == kX4) {
      const Rational beta = one - alpha;
      if (beta == 0)
        throw InconsistentCusps("the two cusps agree on X^4, so a_{4,0,0} has no constant term and the fiber at s = 0 is singular", m);
      out.add_term(m, RatFunQ(alpha) * s_power(9) + RatFunQ(beta));
      continue;
    }
    if (alpha != one)
      throw InconsistentCusps("coefficient of " + mono(m) + " differs between the cusps (" + to_string(alpha) +
                                  " vs " + to_string(one) + ")",
                              m);
    if (alpha != 0) out.add_term(m, RatFunQ(alpha) * s_power(w));
  }
  if (!is_smooth(specialize(out, Rational(0))))
    throw InconsistentCusps("the reconstructed fiber at s = 0 is singular", kX4);
  return out;
}

std::pair<PolyQ, PolyQ> extract_cusps(const PolyQs& s_form) {
  PolyQ inf;
  for (const auto& m : monomials_of_degree(3, 4)) {
    const RatFunQ c = s_form.coeff(m);
    const int w = weight(m);
    if (w >= 0 && c.is_polynomial()) inf.add_term(m, c.num().coeff(w));
  }
  return {inf, specialize(s_form, Rational(1))};
}

Report verify_reconstruction() {
  Report rep{"reconstruction", {}};
  const PolyQs spar = family(Presentation::s_form);
  const auto [inf, one] = extract_cusps(spar);
  rep.add("leading coefficients give F_inf", inf == f_inf());
  rep.add("fiber at s = 1 is F_1", one == f1());
  try {
    rep.add("reconstruct(F_inf, F_1) is the sparse family", reconstruct_family(f_inf(), f1()) == spar);
  } catch (const InconsistentCusps& e) {
    rep.add("reconstruct(F_inf, F_1) is the sparse family", false, e.what());
  }
  try {
    reconstruct_family(f1(), f1());
    rep.add("F_1 given twice is rejected", false);
  } catch (const InconsistentCusps& e) {
    rep.add("F_1 given twice is rejected", true, e.what());
  }
  bool table = true;
  for (const auto& e : degree_table(spar)) table = table && e.pass;
  rep.add("coefficient degrees and shapes", table);
  return rep;
}

// -- Stable differentials -------------------------------------------------------

NFElem residue(const RatFunNF& f, const NFElem& a) {
  if (!f.den().eval(a).is_zero()) return NFElem(0);
  const NFElem d = f.den().derivative().eval(a);
  if (d.is_zero()) throw std::domain_error("residue: pole at " + to_string(a) + " is not simple");
  return f.num().eval(a) / d;
}

int order_at(const RatFunNF& f, const NFElem& a) {
  if (f.is_zero()) throw std::domain_error("order_at: zero function");
  const UPoly<NFElem> lin(std::vector<NFElem>{-a, NFElem(1)});
  auto mult = [&](UPoly<NFElem> p) {
    int k = 0;
    while (p.degree() > 0 && p.eval(a).is_zero()) {
      p = exact_div(p, lin);
      ++k;
    }
    return k;
  };
  return mult(f.num()) - mult(f.den());
}

NodeTriple reducible_nodes() { return {in_v(-2, 6, 5, 17), in_v(-6, -8, 13, 17), in_v(8, 2, -15, 17)}; }
NodeTriple reducible_nodes_alternative() { return {in_v(6, 18, -21, 19), in_v(-18, -12, 27, 19), in_v(12, -6, -33, 19)}; }

std::array<NFElem, 4> reducible_residues() {
  return {in_v(-1, -1, 3, 1), NFElem(1), in_v(1, 0, -3, 1), in_v(-1, 0, 2, 1)};
}
std::array<NFElem, 3> irreducible_residues() { return {in_v(-1, -1, 0, 1), in_v(0, 1, 1, 1), in_v(-2, -3, 2, 1)}; }
NFElem mu_infinity() { return in_v(1, 2, -2, 1); }
NFElem mu_one() { return in_v(-1, 0, 2, 1); }
std::array<NFElem, 3> irreducible_points() { return {NFElem(1), in_v(-1, 0, 2, 1), in_v(1, 0, -3, 1)}; }

StableDifferential reducible_on_T(int i, GaloisConvention c, const NodeTriple& nodes) {
  const auto idx = static_cast<std::size_t>(i);
  const auto r = reducible_residues();
  std::array<NFElem, 4> ri;
  for (std::size_t k = 0; k < 4; ++k) ri[k] = galois_conjugates(r[k], c)[idx];
  const NFElem mu = galois_conjugates(mu_infinity(), c)[idx];
  return make_form("T", mu,
                   {{NFElem(1), ri[0]}, {NFElem(-1), -ri[0]}, {nodes.b, ri[1]}, {nodes.c, ri[2]}, {nodes.d, ri[3]}});
}

StableDifferential reducible_on_U(int i, GaloisConvention c) {
  const auto idx = static_cast<std::size_t>(i);
  const auto r = reducible_residues();
  const NFElem mu = galois_conjugates(mu_infinity(), c)[idx];
  return make_form("U", mu,
                   {{NFElem(0), -galois_conjugates(r[1], c)[idx]},
                    {NFElem(1), -galois_conjugates(r[2], c)[idx]},
                    {NFElem(-1), -galois_conjugates(r[3], c)[idx]}});
}

StableDifferential irreducible_form(int i, GaloisConvention c) {
  const auto idx = static_cast<std::size_t>(i);
  const auto r = irreducible_residues();
  const auto x = irreducible_points();
  const NFElem mu = galois_conjugates(mu_one(), c)[idx];
  std::vector<std::pair<NFElem, NFElem>> poles;
  for (std::size_t k = 0; k < 3; ++k) {
    const NFElem rk = galois_conjugates(r[k], c)[idx];
    poles.emplace_back(x[k], rk);
    poles.emplace_back(zeta3() * x[k], -rk);
  }
  return make_form("P1", mu, std::move(poles));
}

Report verify_cusp_relation(Cusp which, GaloisConvention c) {
  if (which == Cusp::irreducible) {
    Report rep{"cusp-irreducible (" + to_string(c) + ")", {}};
    std::array<StableDifferential, 3> w{irreducible_form(0, c), irreducible_form(1, c), irreducible_form(2, c)};
    for (int i = 0; i < 3; ++i) {
      std::string d;
      rep.add("residues of omega^(" + std::to_string(i + 1) + ")", residues_match(w[static_cast<std::size_t>(i)], d), d);
    }
    const RatFunNF val = substitute(f1(), {-w[0].form, w[1].form, w[2].form});
    rep.add("F_1(-omega^(1), omega^(2), omega^(3)) = 0", val.is_zero(), val.is_zero() ? "" : val.to_string("z"));
    const PolyNF F = lift_nf(f1());
    const auto x = irreducible_points();
    for (std::size_t k = 0; k < 3; ++k) {
      std::array<NFElem, 3> a, b;
      for (std::size_t i = 0; i < 3; ++i) {
        a[i] = residue(w[i].form, x[k]);
        b[i] = residue(w[i].form, zeta3() * x[k]);
      }
      a[0] = -a[0];
      b[0] = -b[0];
      const ProjPoint<NFElem> p = node_point(a);
      rep.add("branches at x_" + std::to_string(k + 1) + " and zeta3 x_" + std::to_string(k + 1) + " meet",
              p == node_point(b));
      rep.add("node " + std::to_string(k + 1) + " is singular on F_1", verify_singular(F, p), p.to_string());
    }
    return rep;
  }

  Report rep{"cusp-reducible (" + to_string(c) + ")", {}};
  const NodeTriple nodes = reducible_nodes();
  std::array<StableDifferential, 3> t{reducible_on_T(0, c, nodes), reducible_on_T(1, c, nodes),
                                      reducible_on_T(2, c, nodes)};
  std::array<StableDifferential, 3> u{reducible_on_U(0, c), reducible_on_U(1, c), reducible_on_U(2, c)};
  for (std::size_t i = 0; i < 3; ++i) {
    std::string d;
    bool ok = residues_match(t[i], d);
    if (ok) ok = residues_match(u[i], d);
    rep.add("residues of omega^(" + std::to_string(i + 1) + ")", ok, d);
  }
  const RatFunNF on_t = substitute(f_inf(), {t[0].form, t[1].form, t[2].form});
  const RatFunNF on_u = substitute(f_inf(), {u[0].form, u[1].form, u[2].form});
  rep.add("F_inf vanishes on T", on_t.is_zero());
  rep.add("F_inf vanishes on U", on_u.is_zero());
  // T lands on the cubic factor and U on the line.
  rep.add("U maps to the line X + Y + Z", substitute(f_inf_line(), {u[0].form, u[1].form, u[2].form}).is_zero());

  bool anti = true;
  const std::array<std::pair<NFElem, NFElem>, 3> glued{
      {{nodes.b, NFElem(0)}, {nodes.c, NFElem(1)}, {nodes.d, NFElem(-1)}}};
  for (std::size_t i = 0; i < 3; ++i) {
    anti = anti && residue(t[i].form, NFElem(1)) + residue(t[i].form, NFElem(-1)) == NFElem(0);
    for (const auto& [a, b] : glued) anti = anti && residue(t[i].form, a) + residue(u[i].form, b) == NFElem(0);
  }
  rep.add("opposite residues at the two branches of every node", anti);

  const int ord = order_at(t[0].form, NFElem(0));
  rep.add("omega^(1)|T has a triple zero at z = 0", ord == 3, "order " + std::to_string(ord));
  rep.add("omega^(2)|T vanishes at z = 0", order_at(t[1].form, NFElem(0)) > 0);

  const NodeTriple alt = reducible_nodes_alternative();
  const StableDifferential a0 = reducible_on_T(0, c, alt);
  const StableDifferential a1 = reducible_on_T(1, c, alt);
  rep.add("alternative node triple also gives a triple zero", order_at(a0.form, NFElem(0)) == 3);
  rep.add("alternative node triple is rejected", order_at(a1.form, NFElem(0)) <= 0,
          "conjugate order " + std::to_string(order_at(a1.form, NFElem(0))));

  const PolyNF F = lift_nf(f_inf());
  std::vector<std::pair<std::string, NFElem>> t_nodes{{"A", NFElem(1)}, {"B", nodes.b}, {"C", nodes.c}, {"D", nodes.d}};
  for (const auto& [name, a] : t_nodes) {
    std::array<NFElem, 3> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = residue(t[i].form, a);
    const ProjPoint<NFElem> p = node_point(r);
    rep.add("node " + name + " is singular on F_inf", verify_singular(F, p), p.to_string());
  }
  return rep;
}

// -- Orbifold fiber ---------------------------------------------------------------

namespace {

using RatX = RationalFunction<NFElem>;

const FieldHandle& tower() { return orbifold_tower(); }

RatX x_minus(int a) {
  return RatX(UPoly<NFElem>(std::vector<NFElem>{lift(NFElem(-a), tower()), lift(NFElem(1), tower())}));
}

RatX rpow(const RatX& f, int e) {
  RatX r(lift(NFElem(1), tower()));
  const RatX b = e < 0 ? f.inverse() : f;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

}  // namespace

SuperellipticMonomial SuperellipticMonomial::reduce() const {
  const int r = ((y_exponent % 9) + 9) % 9;
  const int q = (y_exponent - r) / 9;
  const RatX y9 = rpow(x_minus(0), 2) * rpow(x_minus(1), 3);
  return {r, coefficient * rpow(y9, q)};
}

std::array<SuperellipticMonomial, 3> orbifold_differentials(bool normalized) {
  const RatX x = x_minus(0);
  const RatX x1 = x_minus(1);
  std::array<SuperellipticMonomial, 3> w{SuperellipticMonomial{1, (x * x1).inverse()},
                                         SuperellipticMonomial{5, (rpow(x, 2) * rpow(x1, 2)).inverse()},
                                         SuperellipticMonomial{7, (rpow(x, 2) * rpow(x1, 3)).inverse()}};
  if (normalized) {
    const NFElem z3 = lift(zeta3(), tower());
    w[0].coefficient *= RatX(-z3);
    w[1].coefficient *= RatX(NFElem::generator(tower()));
  }
  return w;
}

std::array<RationalFunction<NFElem>, 9> substitute_orbifold(const PolyQ& f) {
  const auto w = orbifold_differentials(true);
  std::array<RationalFunction<NFElem>, 9> out;
  for (const auto& [m, c] : f.terms()) {
    if (total_degree(m) != 4) throw std::invalid_argument("substitute_orbifold: expected a quartic");
    SuperellipticMonomial t{0, RatX(lift(NFElem(c), tower()))};
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < m[i]; ++k) t = t * w[i];
    t = t.reduce();
    out[static_cast<std::size_t>(t.y_exponent)] += t.coefficient;
  }
  return out;
}

Report verify_orbifold_relation() {
  Report rep{"orbifold", {}};
  const auto v = substitute_orbifold(f0());
  std::string nz;
  for (std::size_t r = 0; r < 9; ++r)
    if (!v[r].is_zero()) nz += (nz.empty() ? "y^" : ", y^") + std::to_string(r);
  rep.add("F_0(X, Y, Z) = 0 on y^9 = x^2(x-1)^3", nz.empty(), nz.empty() ? "" : "nonzero at " + nz);
  // Every monomial of F_0 lands in the y^4 eigenspace.
  bool eigen = true;
  const PolyQ f = f0();
  for (const auto& [m, c] : f.terms()) eigen = eigen && (m[0] + 5 * m[1] + 7 * m[2]) % 9 == 4;
  rep.add("all monomials of F_0 have y-exponent 4 mod 9", eigen);
  rep.add("F_0 is the fiber at s = 0", family_at(Presentation::s_form, Rational(0)) == f0());
  rep.add("F_0 is smooth", is_smooth(f0()));
  return rep;
}

// -- Divisors, smoothness and flexes ----------------------------------------------

Report verify_divisor_conditions(const Rational& t) {
  Report rep{"divisors (t = " + to_string(t) + ")", {}};
  const PolyQ F = family_at(Presentation::t_form, t);
  const ProjLine<Rational> x0(Rational(1), Rational(0), Rational(0));
  const auto sec = line_section(F, x0);
  bool p3 = false, q1 = false;
  for (const auto& [pt, m] : sec.points) {
    if (pt == p_point()) p3 = m == 3;
    if (pt == q_point()) q1 = m == 1;
  }
  rep.add("X = 0 cuts 3P + Q", !sec.component && p3 && q1 && sec.total() == 4);
  PolyQ restricted;
  for (const auto& [m, c] : F.terms())
    if (m[0] == 0) restricted.add_term(m, c);
  PolyQ expected = constant_poly("Y^4 + Y^3*Z");
  expected *= Rational(3) * t;
  rep.add("F_t(0, Y, Z) = 3t Y^3 (Y + Z)", restricted == expected);
  rep.add("Y = 0 passes through P", ProjLine<Rational>(Rational(0), Rational(1), Rational(0)).contains(p_point()));
  const PolyQs s = family(Presentation::s_form);
  const bool zero = s.coeff({0, 0, 4}).is_zero() && s.coeff({0, 1, 3}).is_zero() && s.coeff({0, 2, 2}).is_zero();
  rep.add("a_{0,0,4} = a_{0,1,3} = a_{0,2,2} = 0", zero);
  return rep;
}

Report verify_special_fibers() {
  Report rep{"special-fibers", {}};
  rep.add("F_inf = (X + Y + Z) * cubic", f_inf_line() * f_inf_cubic() == f_inf());
  rep.add("F_inf is singular", !is_smooth(f_inf()));
  rep.add("F_1 is singular", !is_smooth(f1()));
  rep.add("F_0 is smooth", is_smooth(f0()));
  rep.add("t-form at 1 is F_1", family_at(Presentation::t_form, Rational(1)) == f1());
  rep.add("t = 0 is a degenerate presentation point (the quadruple line X^4)", family_at(Presentation::t_form, Rational(0)) == constant_poly("X^4"));
  rep.add("s-form at 1 is F_1", family_at(Presentation::s_form, Rational(1)) == f1());
  std::string bad;
  for (const auto& t : t_samples())
    if (!is_smooth(family_at(Presentation::t_form, t))) bad += (bad.empty() ? "" : ", ") + to_string(t);
  rep.add("sampled t-fibers are smooth", bad.empty(), bad);
  rep.add("generic s-fiber is smooth", is_smooth(family(Presentation::s_form)));
  return rep;
}

Report verify_hyperflex(const Rational& t) {
  Report rep{"flexes (t = " + to_string(t) + ")", {}};
  const PolyQ F = family_at(Presentation::t_form, t);
  const FlexClass q = classify_flex(F, q_point());
  rep.add("Q is a hyperflex", q.kind == FlexKind::hyperflex, q.to_string());
  const FlexClass p = classify_flex(F, p_point());
  rep.add("P is a flex with tangent X = 0",
          p.kind == FlexKind::flex && tangent_line(F, p_point()) == ProjLine<Rational>(Rational(1), Rational(0), Rational(0)),
          p.to_string());
  const TorsionProjection m = torsion_projection(t);
  rep.add("projection from Q has degree 3", m.degree == 3);
  rep.add("totally ramified over the images of P and Q",
          m.partition_p == std::vector<int>{3} && m.partition_q == std::vector<int>{3});
  rep.add("six further simple branch points", m.simple_points == 6 && m.triple_points == 2,
          std::to_string(m.simple_points) + " simple, " + std::to_string(m.triple_points) + " triple");
  // Riemann-Hurwitz for a degree-3 map from genus 3 to P^1.
  rep.add("total ramification 2g - 2 + 2 deg = 10", m.total_ramification == 10,
          "sum(e - 1) = " + std::to_string(m.total_ramification));
  return rep;
}

TorsionProjection torsion_projection(const Rational& t) {
  const PolyQ F = family_at(Presentation::t_form, t);
  const auto m = central_projection(F, q_point());
  TorsionProjection out;
  out.degree = m.degree;
  out.partition_p = fiber_partition(m, m.image(p_point()));
  out.partition_q = fiber_partition(m, m.image(q_point()));
  for (const auto& b : m.branch) {
    if (b.partition == std::vector<int>{2, 1}) out.simple_points += b.points();
    if (b.partition == std::vector<int>{3}) out.triple_points += b.points();
  }
  out.total_ramification = m.total_ramification();
  return out;
}

}  // namespace gdpf::ks
