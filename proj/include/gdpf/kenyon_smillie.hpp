#pragma once

// The Kenyon-Smillie (2,3,4) family of plane quartics: both presentations,
// the special fibers, their stable differentials, the order-9 symmetry, the
// coefficient-degree table and the reconstruction of the family from the
// two cusps.

#include "gdpf/multipoly.hpp"
#include "gdpf/number_field.hpp"
#include "gdpf/plane_geometry.hpp"
#include "gdpf/ratfun.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpf::ks {

enum class Presentation { t_form, s_form };

/// The family over Q(t) (t-form) or over Q(s) (s-form, the ninefold cover).
PolyQs family(Presentation p);
PolyQ family_at(Presentation p, const Rational& value);

/// Orbifold fiber X^4 + XZ^3 + 3Y^3Z.
PolyQ f0();
/// Irreducible cusp.
PolyQ f1();
/// Reducible cusp and its two factors.
PolyQ f_inf();
PolyQ f_inf_line();
PolyQ f_inf_cubic();

/// Zeros of the first eigendifferential on each smooth t-fiber.
ProjPoint<Rational> p_point();  // triple zero (0:0:1)
ProjPoint<Rational> q_point();  // simple zero (0:1:-1)

/// Sampled smooth parameters for "for every t" statements.
const std::vector<Rational>& t_samples();

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  void add(std::string check, bool ok, std::string detail = {}) {
    checks.push_back({std::move(check), ok, std::move(detail)});
  }
  std::string to_string() const;
};

/// F_s(X, s^2 Y, s^3 Z) = F_t at t = s^9. Mismatching monomials are named.
Report verify_descent(const PolyQs& s_form, const PolyQs& t_form);
Report verify_descent();

/// lambda F_s(X,Y,Z) = F_{zeta9^2 s}(zeta9 X, zeta9^5 Y, zeta9^7 Z) with
/// lambda = zeta9^lambda_exponent.
Report verify_symmetry(int lambda_exponent = 4);

struct DegreeEntry {
  Monomial ijk;
  /// 4i + 2j + k - 7.
  int weight = 0;
  /// Degree of the coefficient in s, nullopt when it is zero.
  std::optional<int> degree;
  /// Nonzero coefficients of the coefficient polynomial in s.
  int terms = 0;
  bool shape_ok = false;
  bool pass = false;
};

/// One entry per monomial of degree 4, in the order (4,0,0), (3,1,0), ...,
/// (0,0,4): degree of each coefficient against max(weight, ZERO) and the
/// single-term shape (two terms, s^9 and 1, for X^4).
std::vector<DegreeEntry> degree_table(const PolyQs& f);
std::vector<DegreeEntry> degree_table();

class InconsistentCusps : public std::domain_error {
 public:
  InconsistentCusps(const std::string& what, Monomial m) : std::domain_error(what), monomial_(std::move(m)) {}
  const Monomial& monomial() const { return monomial_; }

 private:
  Monomial monomial_;
};

/// Coefficient of X^iY^jZ^k is alpha * s^(4i+2j+k-7) with alpha from F_inf;
/// for X^4 the constant term is the F_one coefficient minus alpha.
PolyQs reconstruct_family(const PolyQ& f_infinity, const PolyQ& f_one);

/// Leading coefficients (the fiber at infinity) and the fiber at s = 1.
std::pair<PolyQ, PolyQ> extract_cusps(const PolyQs& s_form);

Report verify_reconstruction();

// -- Stable differentials at the cusps -------------------------------------

enum class Cusp { reducible, irreducible };

/// A meromorphic differential f(z) dz on one component of a normalization.
struct StableDifferential {
  std::string component;
  RatFunNF form;
  /// Declared simple poles with their residues.
  std::vector<std::pair<NFElem, NFElem>> poles;
};

/// Residue of f at a simple pole a.
NFElem residue(const RatFunNF& f, const NFElem& a);
/// Order of vanishing at a (negative for poles).
int order_at(const RatFunNF& f, const NFElem& a);

struct NodeTriple {
  NFElem b, c, d;
};
/// The positions of the three nodes on T, and the rejected alternative.
NodeTriple reducible_nodes();
NodeTriple reducible_nodes_alternative();

/// Residue tuples as elements of Q(zeta9).
std::array<NFElem, 4> reducible_residues();  // r_A, r_B, r_C, r_D
std::array<NFElem, 3> irreducible_residues();
NFElem mu_infinity();
NFElem mu_one();
std::array<NFElem, 3> irreducible_points();  // x_1, x_2, x_3

/// The i-th Galois conjugate (i = 0, 1, 2) of the stable differential.
StableDifferential reducible_on_T(int i, GaloisConvention c, const NodeTriple& nodes);
StableDifferential reducible_on_U(int i, GaloisConvention c);
StableDifferential irreducible_form(int i, GaloisConvention c);

Report verify_cusp_relation(Cusp which, GaloisConvention c = GaloisConvention::fix_zeta3);

// -- The orbifold fiber ------------------------------------------------------

/// c * y^e * R(x) (dx)^k on y^9 = x^2 (x-1)^3, with 0 <= e < 9 after reduce().
struct SuperellipticMonomial {
  int y_exponent = 0;
  RationalFunction<NFElem> coefficient;

  SuperellipticMonomial reduce() const;
  friend SuperellipticMonomial operator*(const SuperellipticMonomial& a, const SuperellipticMonomial& b) {
    return {a.y_exponent + b.y_exponent, a.coefficient * b.coefficient};
  }
};

/// The three eigendifferentials y dx/(x(x-1)), y^5 dx/(x^2(x-1)^2),
/// y^7 dx/(x^2(x-1)^3), scaled by (-zeta3, (zeta3/3)^(1/3), 1) when
/// `normalized`.
std::array<SuperellipticMonomial, 3> orbifold_differentials(bool normalized = true);

/// Value of a quartic at the three differentials, grouped by y-exponent.
std::array<RationalFunction<NFElem>, 9> substitute_orbifold(const PolyQ& f);

Report verify_orbifold_relation();

/// The line X = 0 cuts 3 P + Q on the t-fiber, Y = 0 passes through P, and
/// the s-form has a_{0,0,4} = a_{0,1,3} = a_{0,2,2} = 0.
Report verify_divisor_conditions(const Rational& t);

/// Smoothness pattern of the special and sampled fibers, the factorization
/// of F_inf and the nodes of both cusps.
Report verify_special_fibers();

/// Projection from Q_t onto the pencil of lines through it.
struct TorsionProjection {
  int degree = 0;
  std::vector<int> partition_p, partition_q;
  /// Geometric branch points by partition.
  int simple_points = 0;
  int triple_points = 0;
  int total_ramification = 0;
};
TorsionProjection torsion_projection(const Rational& t);

/// Hyperflex at Q, flex at P and the torsion map at t.
Report verify_hyperflex(const Rational& t);

}  // namespace gdpf::ks
