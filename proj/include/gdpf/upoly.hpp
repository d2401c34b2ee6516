#pragma once

// Dense univariate polynomials over an exact field K.

#include "gdpf/number_field.hpp"
#include "gdpf/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdpf {

template <class K>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const K& c) {  // NOLINT(google-explicit-constructor)
    if (!gdpf::is_zero(c)) c_.push_back(c);
  }
  UPoly(int c) : UPoly(K(c)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients from the constant term upward.
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const K& c, int deg) {
    if (gdpf::is_zero(c)) return {};
    std::vector<K> v(static_cast<std::size_t>(deg) + 1, K(0));
    v.back() = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& lead() const { return c_.back(); }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : K(0);
  }
  const std::vector<K>& coeffs() const { return c_; }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!gdpf::is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }
  bool is_monomial() const { return !c_.empty() && valuation() == degree(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly& operator*=(const K& s) {
    if (gdpf::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (gdpf::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (gdpf::is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(UPoly a, const K& s) { return a *= s; }
  friend UPoly operator*(const K& s, UPoly a) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Quotient and remainder, a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv = K(1) / b.lead();
    const bool monic = b.lead() == K(1);
    for (std::size_t i = r.size(); i-- >= b.c_.size();) {
      if (gdpf::is_zero(r[i])) continue;
      const K f = monic ? r[i] : r[i] * inv;
      const std::size_t shift = i + 1 - b.c_.size();
      q[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[shift + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  /// Quotient that must be exact; throws otherwise.
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    if (lead() == K(1)) return *this;
    return *this * (K(1) / lead());
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> r(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
    return UPoly(std::move(r));
  }

  /// Evaluates at a point of K or of any field E that K embeds into.
  template <class E = K>
  E eval(const E& x) const {
    E r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + E(c_[i]);
    return r;
  }

  /// p(x^n).
  UPoly compose_power(int n) const {
    if (n < 1) throw std::invalid_argument("compose_power needs n >= 1");
    if (is_zero()) return {};
    std::vector<K> r(static_cast<std::size_t>(degree() * n) + 1, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(n)] = c_[i];
    return UPoly(std::move(r));
  }

  /// p(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * q + UPoly(c_[i]);
    return r;
  }

  /// p(x + a).
  UPoly shift(const K& a) const { return compose(UPoly(std::vector<K>{a, K(1)})); }

  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (gdpf::is_zero(c_[i])) continue;
      std::string cs = gdpf::to_string(c_[i]);
      const bool simple = cs.find_first_of("+-", 1) == std::string::npos;
      bool neg = simple && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (!simple) cs = "(" + cs + ")";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mono.empty())
        out << cs;
      else if (cs == "1")
        out << mono;
      else
        out << cs << "*" << mono;
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && gdpf::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
bool is_zero(const UPoly<K>& p) {
  return p.is_zero();
}

/// Cheap sufficient test for gcd(a, b) = 1; false means "unknown".
template <class K>
bool certainly_coprime(const UPoly<K>&, const UPoly<K>&) {
  return false;
}
/// Over Q: gcd modulo a prime that keeps both degrees.
bool certainly_coprime(const UPoly<Rational>& a, const UPoly<Rational>& b);

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly<K>(K(1));
  if (a.is_monomial() || b.is_monomial()) {
    const int k = std::min(a.valuation(), b.valuation());
    return UPoly<K>::monomial(K(1), k);
  }
  if (certainly_coprime(a, b)) return UPoly<K>(K(1));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Square-free decomposition (Yun): p = lc * prod f_i^i with f_i square-free,
/// pairwise coprime. Entry i-1 holds f_i.
template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& p) {
  std::vector<UPoly<K>> out;
  if (p.degree() < 1) return out;
  UPoly<K> a = p.monic();
  UPoly<K> b = a.derivative();
  UPoly<K> c = gcd(a, b);
  UPoly<K> w = exact_div(a, c);
  UPoly<K> y = exact_div(b, c);
  UPoly<K> z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly<K> g = gcd(w, z);
    out.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

/// Roots of p lying in Q, with multiplicity (rational-root theorem on the
/// square-free parts).
std::vector<std::pair<Rational, int>> rational_roots(const UPoly<Rational>& p);

}  // namespace gdpf
