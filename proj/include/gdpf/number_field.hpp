#pragma once

// Algebraic number fields as towers K_0 = Q ⊂ K_1 ⊂ ... where each step is
// K_{i+1} = K_i[x]/(m(x)) for a monic irreducible m over K_i.

#include "gdpf/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpf {

class NumberField;
/// Null handle means the rationals.
using FieldHandle = std::shared_ptr<const NumberField>;

class NFElem {
 public:
  NFElem() = default;
  NFElem(int n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  NFElem(const Rational& q) : q_(q) {}  // NOLINT(google-explicit-constructor)

  /// Element of `field` with the given coordinates over field->base().
  /// Coordinates beyond the relative degree are reduced modulo the minimal
  /// polynomial.
  static NFElem from_coords(FieldHandle field, std::vector<NFElem> coords);
  static NFElem generator(const FieldHandle& field);

  const FieldHandle& field() const { return field_; }
  /// Coordinates over field()->base(); empty when field() is null.
  const std::vector<NFElem>& coords() const { return c_; }
  /// Value when field() is null.
  const Rational& rational_value() const { return q_; }

  bool is_zero() const;
  /// True when the element lies in Q (at any tower depth).
  bool is_rational() const;
  /// The rational value; throws if !is_rational().
  Rational to_rational() const;

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);
  NFElem inverse() const;
  NFElem pow(long e) const;

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

 private:
  FieldHandle field_;
  Rational q_;
  std::vector<NFElem> c_;
};

class NumberField {
 public:
  NumberField(FieldHandle base, std::vector<NFElem> minpoly, std::string generator_name,
              bool irreducibility_verified);

  const FieldHandle& base() const { return base_; }
  /// Monic minimal polynomial, coefficients from constant term upward.
  const std::vector<NFElem>& minpoly() const { return minpoly_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  int absolute_degree() const;
  int depth() const;
  const std::string& generator_name() const { return name_; }
  /// False when irreducibility could not be decided and was taken on trust.
  bool irreducibility_verified() const { return verified_; }

 private:
  FieldHandle base_;
  std::vector<NFElem> minpoly_;
  std::string name_;
  bool verified_;
};

int absolute_degree(const FieldHandle& f);
/// True when `ancestor` is `f` or one of its bases (null = Q is everyone's).
bool is_subfield(const FieldHandle& ancestor, const FieldHandle& f);
/// Embeds a into `target`, which must contain a.field().
NFElem lift(const NFElem& a, const FieldHandle& target);
/// Smallest field of the tower containing both; throws std::domain_error if
/// the two fields are not on a common tower.
FieldHandle common_field(const FieldHandle& a, const FieldHandle& b);

class ReducibleMinpoly : public std::domain_error {
 public:
  ReducibleMinpoly(const std::string& what, std::vector<NFElem> factor)
      : std::domain_error(what), factor_(std::move(factor)) {}
  /// A proper monic factor, constant term first.
  const std::vector<NFElem>& factor() const { return factor_; }

 private:
  std::vector<NFElem> factor_;
};

/// Creates base[x]/(minpoly). The polynomial is made monic. Degree one
/// returns `base` itself. Irreducibility is decided exactly over Q up to
/// degree 6 and for degree <= 3 over a number field (finite-field root
/// certificate); otherwise the field is flagged as unverified.
/// Throws ReducibleMinpoly with a witness factor when a factorization is found.
FieldHandle nf_create(std::vector<NFElem> minpoly, FieldHandle base, std::string name);

/// Result of the exact irreducibility test over Q.
struct IrreducibilityReport {
  bool decided = false;
  bool irreducible = false;
  std::vector<Rational> factor;  // monic witness when reducible
};
IrreducibilityReport irreducible_over_q(const std::vector<Rational>& poly);

std::string to_string(const NFElem& a);
inline bool is_zero(const NFElem& a) { return a.is_zero(); }
inline std::size_t pivot_cost(const NFElem& a) {
  return a.is_rational() ? pivot_cost(a.to_rational()) : 64 * a.coords().size();
}

/// Evaluates the coordinate polynomial of x (a depth-one field over Q) at
/// `image`, i.e. applies the homomorphism generator -> image.
NFElem apply_generator_map(const NFElem& x, const NFElem& image);

// -- The fields used for the Kenyon-Smillie data ---------------------------

/// Q(v), v^3 - 3v + 1 = 0 (v = 2cos(2pi/9)).
const FieldHandle& cubic_field();
/// Q(zeta9) with Phi_9(x) = x^6 + x^3 + 1.
const FieldHandle& cyclotomic9();
/// Q(zeta9)[u]/(u^3 - zeta3/3).
const FieldHandle& orbifold_tower();

NFElem zeta9();
NFElem zeta3();  // zeta9^3
/// v = zeta9 + zeta9^8 inside Q(zeta9).
NFElem v_in_cyclotomic();

enum class GaloisConvention { full, fix_zeta3 };
std::string to_string(GaloisConvention c);
GaloisConvention parse_convention(const std::string& text);

/// Exponents k with zeta9 -> zeta9^k realizing (v, 2-v-v^2, -2+v^2) on v.
std::array<int, 3> galois_exponents(GaloisConvention c);

/// The ordered conjugate triple (x^(1), x^(2), x^(3)). Supports rationals,
/// elements of cubic_field() and of cyclotomic9().
std::array<NFElem, 3> galois_conjugates(const NFElem& x,
                                        GaloisConvention c = GaloisConvention::fix_zeta3);

/// Maps an element of Q(v) into Q(zeta9) via v -> zeta9 + zeta9^8.
NFElem cubic_to_cyclotomic(const NFElem& x);

}  // namespace gdpf
