#pragma once

// The field K(s) of univariate rational functions over an exact field K.
// Values are kept reduced: numerator and denominator coprime, denominator monic.

#include "gdpf/upoly.hpp"

#include <string>
#include <utility>

namespace gdpf {

template <class K>
class RationalFunction {
 public:
  using Poly = UPoly<K>;

  RationalFunction() : den_(K(1)) {}
  RationalFunction(int c) : num_(K(c)), den_(K(1)) {}        // NOLINT(google-explicit-constructor)
  RationalFunction(const K& c) : num_(c), den_(K(1)) {}      // NOLINT(google-explicit-constructor)
  RationalFunction(Poly p) : num_(std::move(p)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  /// The parameter itself.
  static RationalFunction variable() { return RationalFunction(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  K constant_value() const { return num_.coeff(0); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.is_polynomial()) return RationalFunction(a.num_ + b.num_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    if (a.is_polynomial()) return from_reduced(a.num_ * b.den_ + b.num_, b.den_);
    if (b.is_polynomial()) return from_reduced(a.num_ + b.num_ * a.den_, a.den_);
    const Poly g = gcd(a.den_, b.den_);
    if (g.degree() == 0) return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const Poly bd = exact_div(b.den_, g);
    const Poly ad = exact_div(a.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    if (a.is_constant()) return a.scaled(b);
    if (b.is_constant()) return b.scaled(a);
    // Cross-cancel so that the product stays reduced.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
    Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
    Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
    Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
    return from_reduced(n1 * n2, d1 * d2);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    RationalFunction r;
    const K lc = num_.lead();
    r.num_ = den_ * (K(1) / lc);
    r.den_ = num_ * (K(1) / lc);
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction derivative() const {
    if (is_polynomial()) return RationalFunction(num_.derivative());
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Value at a point of K (or an extension E); throws at a pole.
  template <class E = K>
  E eval(const E& x) const {
    const E d = den_.template eval<E>(x);
    if (gdpf::is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
    return num_.template eval<E>(x) / d;
  }

  /// f(g) for a rational function g.
  RationalFunction compose(const RationalFunction& g) const {
    return horner(num_, g) / horner(den_, g);
  }

  /// Degree of the numerator minus that of the denominator (order of growth at infinity).
  int degree_at_infinity() const { return num_.degree() - den_.degree(); }

  std::string to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    auto wrap = [](const std::string& s, bool atomic) { return atomic ? s : "(" + s + ")"; };
    const bool n_atomic = num_.is_monomial() && n.find_first_of(" *") == std::string::npos;
    const bool d_atomic = den_.is_monomial() && d.find_first_of(" *") == std::string::npos;
    return wrap(n, n_atomic) + "/" + wrap(d, d_atomic);
  }

 private:
  static RationalFunction from_reduced(Poly n, Poly d) {
    RationalFunction r;
    if (n.is_zero()) return r;
    const K lc = d.lead();
    if (lc != K(1)) {
      const K inv = K(1) / lc;
      n *= inv;
      d *= inv;
    }
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  RationalFunction scaled(const RationalFunction& other) const {
    RationalFunction r = other;
    r.num_ *= constant_value();
    return r;
  }

  static RationalFunction horner(const Poly& p, const RationalFunction& g) {
    RationalFunction r;
    for (int i = p.degree(); i >= 0; --i) r = r * g + RationalFunction(p.coeff(i));
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(K(1));
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const K lc = den_.lead();
    if (lc != K(1)) {
      const K inv = K(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

template <class K>
bool is_zero(const RationalFunction<K>& f) {
  return f.is_zero();
}

template <class K>
std::string to_string(const RationalFunction<K>& f) {
  return f.to_string("s");
}

template <class K>
std::size_t pivot_cost(const RationalFunction<K>& f) {
  std::size_t c = static_cast<std::size_t>(f.num().degree() + f.den().degree()) * 16;
  for (const auto& x : f.num().coeffs()) c += pivot_cost(x);
  return c;
}

using RatFunQ = RationalFunction<Rational>;
using RatFunNF = RationalFunction<NFElem>;

// -- Parameter derivative of coefficients -----------------------------------
// Constants have derivative zero; rational functions differentiate in s.

inline Rational param_derivative(const Rational&) { return Rational(0); }
inline NFElem param_derivative(const NFElem&) { return NFElem(0); }
template <class K>
RationalFunction<K> param_derivative(const RationalFunction<K>& f) {
  return f.derivative();
}

}  // namespace gdpf
