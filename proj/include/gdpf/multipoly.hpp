#pragma once

// Sparse multivariate polynomials over an exact coefficient field K
// (Rational, NFElem or RationalFunction<...>). Terms are kept in graded
// lexicographic order with the first variable largest.

#include "gdpf/ratfun.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdpf {

using Monomial = std::vector<int>;
using VarNames = std::shared_ptr<const std::vector<std::string>>;

/// The shared variable list (X, Y, Z).
const VarNames& xyz_names();
VarNames make_var_names(std::vector<std::string> names);

int total_degree(const Monomial& m);

/// Graded lex, larger monomials first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All monomials of total degree m in n variables, grlex descending.
std::vector<Monomial> monomials_of_degree(int n_vars, int m);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

// -- Coefficient printing ----------------------------------------------------

inline std::string coeff_to_string(const Rational& c, const std::string&) { return to_string(c); }
inline std::string coeff_to_string(const NFElem& c, const std::string&) { return to_string(c); }
template <class K>
std::string coeff_to_string(const RationalFunction<K>& c, const std::string& param) {
  return c.to_string(param);
}

/// Square matrix acting on the variable vector: P o A means P(A x).
template <class K>
struct LinearSubstitution {
  std::vector<std::vector<K>> m;

  static LinearSubstitution identity(std::size_t n) {
    LinearSubstitution a;
    a.m.assign(n, std::vector<K>(n, K(0)));
    for (std::size_t i = 0; i < n; ++i) a.m[i][i] = K(1);
    return a;
  }
  static LinearSubstitution diagonal(std::vector<K> d) {
    LinearSubstitution a = identity(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) a.m[i][i] = d[i];
    return a;
  }
  std::size_t size() const { return m.size(); }
};

template <class K>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, K, GrlexGreater>;

  MultiPoly() : MultiPoly(xyz_names()) {}
  explicit MultiPoly(VarNames vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const K& c, VarNames vars = xyz_names()) {
    MultiPoly p(std::move(vars));
    if (!gdpf::is_zero(c)) p.terms_[Monomial(p.arity(), 0)] = c;
    return p;
  }
  static MultiPoly monomial(const K& c, Monomial e, VarNames vars = xyz_names()) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.arity()) throw std::invalid_argument("monomial arity mismatch");
    if (!gdpf::is_zero(c)) p.terms_[std::move(e)] = c;
    return p;
  }
  static MultiPoly variable(std::size_t i, VarNames vars = xyz_names()) {
    Monomial e(vars->size(), 0);
    e.at(i) = 1;
    return monomial(K(1), std::move(e), std::move(vars));
  }

  const VarNames& vars() const { return vars_; }
  std::size_t arity() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  K coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  void add_term(const Monomial& e, const K& c) {
    if (gdpf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (gdpf::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const K& s) {
    if (gdpf::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const K& s) { return a *= s; }
  friend MultiPoly operator*(const K& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.vars_);
    Monomial e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(int n) const {
    MultiPoly r = constant(K(1), vars_);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }
  /// Multiplication by a monomial with coefficient one.
  MultiPoly shifted(const Monomial& m) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Monomial f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity() == b.arity() && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly partial_derivative(std::size_t var) const {
    if (var >= arity()) throw std::out_of_range("partial_derivative: variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Monomial f = e;
      f[var] -= 1;
      r.add_term(f, c * K(e[var]));
    }
    return r;
  }
  MultiPoly partial_derivative(const std::string& name) const {
    for (std::size_t i = 0; i < arity(); ++i)
      if ((*vars_)[i] == name) return partial_derivative(i);
    throw std::invalid_argument("unknown variable '" + name + "'");
  }

  /// P(A x). Throws on dimension mismatch.
  MultiPoly substitute_linear(const LinearSubstitution<K>& a) const {
    if (a.size() != arity()) throw std::invalid_argument("substitute_linear: dimension mismatch");
    for (const auto& row : a.m)
      if (row.size() != arity()) throw std::invalid_argument("substitute_linear: matrix is not square");
    std::vector<MultiPoly> images;
    bool diagonal = true;
    for (std::size_t i = 0; i < arity(); ++i) {
      MultiPoly li(vars_);
      for (std::size_t j = 0; j < arity(); ++j) {
        li += variable(j, vars_) * a.m[i][j];
        if (i != j && !gdpf::is_zero(a.m[i][j])) diagonal = false;
      }
      images.push_back(std::move(li));
    }
    MultiPoly r(vars_);
    if (diagonal) {
      for (const auto& [e, c] : terms_) {
        K f = c;
        for (std::size_t i = 0; i < arity(); ++i)
          for (int k = 0; k < e[i]; ++k) f *= a.m[i][i];
        r.add_term(e, f);
      }
      return r;
    }
    std::vector<std::vector<MultiPoly>> powers(arity());
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(c, vars_);
      for (std::size_t i = 0; i < arity(); ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(K(1), vars_));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
        if (e[i] > 0) t *= pw[static_cast<std::size_t>(e[i])];
      }
      r += t;
    }
    return r;
  }

  /// Applies f to every coefficient (result in field L).
  template <class L, class Fn>
  MultiPoly<L> map_coefficients(Fn&& f) const {
    MultiPoly<L> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Value at a point with coordinates in E.
  template <class E>
  E eval(const std::vector<E>& x) const {
    if (x.size() != arity()) throw std::invalid_argument("eval: wrong number of coordinates");
    E r(0);
    for (const auto& [e, c] : terms_) {
      E t(c);
      for (std::size_t i = 0; i < arity(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      r += t;
    }
    return r;
  }

  std::string to_string(const std::string& param = "s") const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = coeff_to_string(c, param);
      const bool simple = cs.find_first_of("+-/ ", 1) == std::string::npos;
      const bool neg = simple && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (!simple) cs = "(" + cs + ")";
      const std::string mono = monomial_to_string(e, *vars_);
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
  void check_vars(const MultiPoly& o) const {
    if (o.arity() != arity()) throw std::invalid_argument("polynomials over different variable lists");
  }

  VarNames vars_;
  Terms terms_;
};

template <class K>
bool is_zero(const MultiPoly<K>& p) {
  return p.is_zero();
}

/// Outcome of dividing P by D.
template <class K>
struct QuotientResult {
  bool divisible = false;
  MultiPoly<K> quotient;
  /// Nonzero remainder of the division algorithm when not divisible.
  MultiPoly<K> remainder;
};

/// Division by a single polynomial in grlex order. The remainder is zero
/// exactly when D divides P.
template <class K>
QuotientResult<K> exact_quotient(const MultiPoly<K>& p, const MultiPoly<K>& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  QuotientResult<K> res{false, MultiPoly<K>(p.vars()), MultiPoly<K>(p.vars())};
  MultiPoly<K> r = p;
  const auto& [lm, lc] = *d.terms().begin();
  const K inv = K(1) / lc;
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms().begin();
    bool divides = true;
    Monomial q(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      q[i] = e[i] - lm[i];
      if (q[i] < 0) divides = false;
    }
    if (!divides) {
      res.remainder.add_term(e, c);
      r.add_term(e, -c);
      continue;
    }
    const K f = c * inv;
    res.quotient.add_term(q, f);
    r -= d.shifted(q) * f;
  }
  res.divisible = res.remainder.is_zero();
  return res;
}

// -- Parametric polynomials --------------------------------------------------

using PolyQ = MultiPoly<Rational>;
using PolyNF = MultiPoly<NFElem>;
using PolyQs = MultiPoly<RatFunQ>;
using PolyNFs = MultiPoly<RatFunNF>;

/// Coefficient of X^i Y^j Z^k as a rational function of the parameter.
template <class K>
RationalFunction<K> coefficient_extract(const MultiPoly<RationalFunction<K>>& f, const Monomial& e) {
  return f.coeff(e);
}

/// Derivative of every coefficient in the parameter.
template <class K>
MultiPoly<K> param_derivative(const MultiPoly<K>& p) {
  MultiPoly<K> r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, param_derivative(c));
  return r;
}

/// Specializes the parameter to a value in K.
template <class K>
MultiPoly<K> specialize(const MultiPoly<RationalFunction<K>>& p, const K& value) {
  return p.template map_coefficients<K>([&](const RationalFunction<K>& c) { return c.eval(value); });
}

/// Replaces the parameter s by g(s).
template <class K>
MultiPoly<RationalFunction<K>> compose_parameter(const MultiPoly<RationalFunction<K>>& p,
                                                 const RationalFunction<K>& g) {
  return p.template map_coefficients<RationalFunction<K>>(
      [&](const RationalFunction<K>& c) { return c.compose(g); });
}

/// Embeds constants into the parametric field.
template <class K>
MultiPoly<RationalFunction<K>> to_parametric(const MultiPoly<K>& p) {
  return p.template map_coefficients<RationalFunction<K>>([](const K& c) { return RationalFunction<K>(c); });
}

/// Maps a polynomial over Q into any field containing Q.
template <class L>
MultiPoly<L> from_rational(const PolyQ& p) {
  return p.template map_coefficients<L>([](const Rational& c) { return L(c); });
}

/// Maps a parametric polynomial over Q(s) into K(s) for a number field K.
PolyNFs lift_parametric(const PolyQs& p, const FieldHandle& field);

}  // namespace gdpf
