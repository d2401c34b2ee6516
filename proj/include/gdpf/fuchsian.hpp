#pragma once

// Monic linear ODEs with rational-function coefficients: changes of
// variable, singular places, indicial equations, Riemann schemes and
// Frobenius series.

#include "gdpf/number_field.hpp"
#include "gdpf/ratfun.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace gdpf {

/// y^(r) + a[r-1] y^(r-1) + ... + a[0] y = 0.
template <class C>
struct LinearODE {
  using RF = RationalFunction<C>;
  std::vector<RF> a;
  std::string var = "t";

  int order() const { return static_cast<int>(a.size()); }
  friend bool operator==(const LinearODE& x, const LinearODE& y) { return x.a == y.a; }
  friend bool operator!=(const LinearODE& x, const LinearODE& y) { return !(x == y); }

  /// "y'' + (a1)*y' + (a0)*y = 0".
  std::string to_string(const std::string& unknown = "y") const {
    std::ostringstream out;
    out << unknown << std::string(a.size(), '\'');
    for (std::size_t k = a.size(); k-- > 0;) {
      if (a[k].is_zero()) continue;
      out << " + (" << a[k].to_string(var) << ")*" << unknown << std::string(k, '\'');
    }
    out << " = 0";
    return out.str();
  }
};

/// A singular place: the roots of a monic square-free polynomial, or infinity.
template <class C>
struct SingularPlace {
  bool infinity = false;
  UPoly<C> poly;  // unused at infinity
  int points() const { return infinity ? 1 : poly.degree(); }
  std::string to_string(const std::string& var) const {
    if (infinity) return "inf";
    if (poly.degree() == 1) return gdpf::to_string(-poly.coeff(0));
    return poly.to_string(var) + " = 0";
  }
};

/// Indicial data at a place: polynomial in rho whose roots are the exponents.
template <class C>
struct LocalExponents {
  UPoly<C> indicial;
  /// Exponents with multiplicity when they lie in C; empty otherwise.
  std::vector<C> exponents;
  bool split = false;
  /// False when the indicial coefficients differ between the roots of the
  /// place (then `indicial` is meaningless).
  bool uniform = true;
};

class IrregularSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <class C>
std::string str(const C& c) {
  return gdpf::to_string(c);
}

/// Inverse of a modulo p (p square-free, gcd(a, p) = 1).
template <class C>
UPoly<C> inverse_mod(const UPoly<C>& a, const UPoly<C>& p) {
  UPoly<C> r0 = p;
  UPoly<C> r1 = divmod(a, p).second;
  UPoly<C> s0;
  UPoly<C> s1(C(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly<C> s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible modulo the place polynomial");
  return divmod(s0 * (C(1) / r0.lead()), p).second;
}

/// Exponent of p in the square-free-factored d, assuming p square-free and
/// every irreducible factor of p appears in d with the same multiplicity.
template <class C>
int multiplicity(UPoly<C> d, const UPoly<C>& p) {
  int e = 0;
  while (d.degree() >= p.degree()) {
    auto [q, r] = divmod(d, p);
    if (!r.is_zero()) break;
    d = std::move(q);
    ++e;
  }
  return e;
}

/// Power series of f at 0 up to u^n (f must be regular at 0).
template <class C>
std::vector<C> series(const RationalFunction<C>& f, int n) {
  std::vector<C> out(static_cast<std::size_t>(n) + 1, C(0));
  const auto& num = f.num();
  const auto& den = f.den();
  const C d0 = den.coeff(0);
  if (is_zero(d0)) throw std::domain_error("series: pole at the expansion point");
  const C inv = C(1) / d0;
  for (int k = 0; k <= n; ++k) {
    C acc = num.coeff(k);
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc * inv;
  }
  return out;
}

/// x(x-1)...(x-k+1)
template <class C>
C falling(const std::type_identity_t<C>& x, int k) {
  C r(1);
  for (int i = 0; i < k; ++i) r *= x - C(i);
  return r;
}

template <class C>
UPoly<C> falling_poly(int k) {
  UPoly<C> r(C(1));
  for (int i = 0; i < k; ++i) r = r * UPoly<C>(std::vector<C>{C(-i), C(1)});
  return r;
}

/// Exact square root in C when available.
inline bool field_sqrt(const Rational& x, Rational& r) { return rational_sqrt(x, r); }
inline bool field_sqrt(const NFElem& x, NFElem& r) {
  if (!x.is_rational()) return false;
  Rational q;
  if (!rational_sqrt(x.to_rational(), q)) return false;
  r = NFElem(q);
  return true;
}

}  // namespace detail

/// Rewrites L under x = phi(u): D_x = (1/phi'(u)) D_u. The result is monic
/// in the new variable `new_var`.
template <class C>
LinearODE<C> change_variable(const LinearODE<C>& L, const RationalFunction<C>& phi, const std::string& new_var) {
  using RF = RationalFunction<C>;
  const int r = L.order();
  const RF g = phi.derivative().inverse();
  // D_x^k = sum_j c[k][j] D_u^j
  std::vector<std::vector<RF>> c(static_cast<std::size_t>(r) + 1);
  c[0] = {RF(1)};
  for (int k = 0; k < r; ++k) {
    const auto& prev = c[static_cast<std::size_t>(k)];
    std::vector<RF> next(prev.size() + 1, RF(0));
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j] += g * prev[j].derivative();
      next[j + 1] += g * prev[j];
    }
    c[static_cast<std::size_t>(k) + 1] = std::move(next);
  }
  std::vector<RF> b(static_cast<std::size_t>(r) + 1, RF(0));
  for (int k = 0; k <= r; ++k) {
    const RF coef = k == r ? RF(1) : L.a[static_cast<std::size_t>(k)].compose(phi);
    if (coef.is_zero()) continue;
    const auto& ck = c[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < ck.size(); ++j) b[j] += coef * ck[j];
  }
  LinearODE<C> out;
  out.var = new_var;
  const RF lead_inv = b[static_cast<std::size_t>(r)].inverse();
  for (int k = 0; k < r; ++k) out.a.push_back(b[static_cast<std::size_t>(k)] * lead_inv);
  return out;
}

/// Pullback along t = s^n.
template <class C>
LinearODE<C> pullback_monomial(const LinearODE<C>& L, int n, const std::string& new_var = "s") {
  if (n <= 0) throw std::invalid_argument("pullback_monomial needs a positive exponent");
  if (n == 1) {
    LinearODE<C> out = L;
    out.var = new_var;
    return out;
  }
  return change_variable(L, RationalFunction<C>(UPoly<C>::monomial(C(1), n)), new_var);
}

/// The equation in u with x = a + u.
template <class C>
LinearODE<C> centered_at(const LinearODE<C>& L, const C& a) {
  return change_variable(L, RationalFunction<C>(UPoly<C>(std::vector<C>{a, C(1)})), "u");
}

/// The equation in u with x = 1/u.
template <class C>
LinearODE<C> at_infinity(const LinearODE<C>& L) {
  return change_variable(L, RationalFunction<C>(UPoly<C>(C(1)), UPoly<C>::x()), "u");
}

/// Indicial data at the roots of the square-free monic polynomial p.
template <class C>
LocalExponents<C> local_exponents_at_place(const LinearODE<C>& L, const UPoly<C>& p) {
  const int r = L.order();
  LocalExponents<C> out;
  const UPoly<C> dp = p.derivative();
  UPoly<C> ind;
  for (int k = 0; k <= r; ++k) {
    UPoly<C> lead_coef;  // element of C[x]/(p)
    if (k == r) {
      lead_coef = UPoly<C>(C(1));
    } else {
      const auto& f = L.a[static_cast<std::size_t>(k)];
      if (f.is_zero()) continue;
      const int e = detail::multiplicity(f.den(), p);
      if (e > r - k)
        throw IrregularSingularity("irregular singular point: coefficient of order " + std::to_string(k) +
                                   " has a pole of order " + std::to_string(e) + " (at most " +
                                   std::to_string(r - k) + " allowed)");
      if (e < r - k) continue;
      UPoly<C> rest = f.den();
      for (int i = 0; i < e; ++i) rest = exact_div(rest, p);
      UPoly<C> denom = rest;
      for (int i = 0; i < e; ++i) denom = divmod(denom * dp, p).second;
      lead_coef = divmod(f.num() * detail::inverse_mod(denom, p), p).second;
    }
    if (lead_coef.degree() > 0) {
      out.uniform = false;
      return out;
    }
    if (!lead_coef.is_zero()) ind += detail::falling_poly<C>(k) * lead_coef.coeff(0);
  }
  out.indicial = ind;
  if (r == 2 && ind.degree() == 2) {
    const C a = ind.coeff(2);
    const C b = ind.coeff(1);
    const C c = ind.coeff(0);
    const C disc = b * b - C(4) * a * c;
    C root;
    if (detail::field_sqrt(disc, root)) {
      const C two_a = C(2) * a;
      C r1 = (-b - root) / two_a;
      C r2 = (-b + root) / two_a;
      out.exponents = {r1, r2};
      out.split = true;
    }
  } else if (r == 1 && ind.degree() == 1) {
    out.exponents = {-ind.coeff(0) / ind.coeff(1)};
    out.split = true;
  }
  return out;
}

template <class C>
LocalExponents<C> local_exponents(const LinearODE<C>& L, const C& point) {
  return local_exponents_at_place(L, UPoly<C>(std::vector<C>{-point, C(1)}));
}

template <class C>
LocalExponents<C> local_exponents_at_infinity(const LinearODE<C>& L) {
  return local_exponents_at_place(at_infinity(L), UPoly<C>::x());
}

template <class C>
LocalExponents<C> local_exponents(const LinearODE<C>& L, const SingularPlace<C>& place) {
  return place.infinity ? local_exponents_at_infinity(L) : local_exponents_at_place(L, place.poly);
}

/// True when no coefficient has a pole at x = 0 of the transformed equation
/// at infinity.
template <class C>
bool infinity_is_singular(const LinearODE<C>& L) {
  const LinearODE<C> M = at_infinity(L);
  for (const auto& f : M.a)
    if (!f.is_zero() && is_zero(f.den().coeff(0))) return true;
  return false;
}

/// Finite places from the square-free parts of the coefficient denominators
/// (rational roots split off as linear places), then infinity if singular.
template <class C>
std::vector<SingularPlace<C>> singular_points(const LinearODE<C>& L) {
  UPoly<C> lcm(C(1));
  for (const auto& f : L.a) {
    if (f.is_zero()) continue;
    const UPoly<C> g = gcd(lcm, f.den());
    lcm = exact_div(lcm * f.den(), g);
  }
  std::vector<SingularPlace<C>> out;
  UPoly<C> rad(C(1));
  for (const auto& part : squarefree_decomposition(lcm)) rad = rad * part;
  if (rad.degree() > 0) {
    if constexpr (std::is_same_v<C, Rational>) {
      UPoly<C> rest = rad;
      for (const auto& [root, mult] : rational_roots(rad)) {
        UPoly<C> lin(std::vector<C>{-root, C(1)});
        out.push_back({false, lin});
        rest = exact_div(rest, lin);
      }
      if (rest.degree() > 0) out.push_back({false, rest.monic()});
    } else {
      out.push_back({false, rad.monic()});
    }
  }
  if (infinity_is_singular(L)) out.push_back({true, UPoly<C>()});
  return out;
}

template <class C>
int singular_point_count(const std::vector<SingularPlace<C>>& places) {
  int n = 0;
  for (const auto& p : places) n += p.points();
  return n;
}

/// Order 2, every singular point regular, exactly three singular points
/// located at 0, 1 and infinity.
template <class C>
bool is_hypergeometric(const LinearODE<C>& L) {
  if (L.order() != 2) return false;
  const auto places = singular_points(L);
  try {
    for (const auto& p : places) {
      auto e = local_exponents(L, p);
      (void)e;
    }
  } catch (const IrregularSingularity&) {
    return false;
  }
  if (singular_point_count(places) != 3) return false;
  bool zero = false;
  bool one = false;
  bool inf = false;
  for (const auto& p : places) {
    if (p.infinity) {
      inf = true;
    } else if (p.poly.degree() == 1) {
      const C root = -p.poly.coeff(0);
      zero = zero || is_zero(root);
      one = one || root == C(1);
    }
  }
  return zero && one && inf;
}

/// Truncated Frobenius solution (x - p)^rho * sum_{m<=N} c_m (x - p)^m.
template <class C>
struct FrobeniusSeries {
  C rho;
  std::vector<C> coeffs;
  /// Valuation of u^r * L(y) / u^rho (at least N + 1 when verified).
  int residual_valuation = 0;
  bool verified = false;
};

class ResonantExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Frobenius series at u = 0 of an equation already centered there.
template <class C>
FrobeniusSeries<C> frobenius_series_at_zero(const LinearODE<C>& L, const C& rho, int N) {
  using RF = RationalFunction<C>;
  const int r = L.order();
  // P_k(u) = u^(r-k) b_k(u) is regular at 0.
  std::vector<std::vector<C>> p(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    RF pk = k == r ? RF(1) : L.a[static_cast<std::size_t>(k)] * RF(UPoly<C>::monomial(C(1), r - k));
    if (!pk.is_zero() && is_zero(pk.den().coeff(0)))
      throw IrregularSingularity("irregular singular point at the expansion point");
    p[static_cast<std::size_t>(k)] = detail::series(pk, N);
  }
  auto indicial = [&](const C& x) {
    C s(0);
    for (int k = 0; k <= r; ++k) s += p[static_cast<std::size_t>(k)][0] * detail::falling<C>(x, k);
    return s;
  };
  if (!is_zero(indicial(rho))) throw std::invalid_argument("rho is not a root of the indicial equation");
  FrobeniusSeries<C> out;
  out.rho = rho;
  out.coeffs.push_back(C(1));
  for (int n = 1; n <= N; ++n) {
    const C in = indicial(rho + C(n));
    if (is_zero(in))
      throw ResonantExponent("resonant exponent: rho + " + std::to_string(n) +
                             " is also a root of the indicial equation (logarithmic case unsupported)");
    C acc(0);
    for (int j = 1; j <= n; ++j) {
      const C cm = out.coeffs[static_cast<std::size_t>(n - j)];
      if (is_zero(cm)) continue;
      C inner(0);
      for (int k = 0; k <= r; ++k) inner += p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                                           detail::falling<C>(rho + C(n - j), k);
      acc += cm * inner;
    }
    out.coeffs.push_back(-acc / in);
  }
  // Residual: L(u^rho S) = u^rho * sum_k b_k sum_i binom(k,i) ff(rho,i) u^-i S^(k-i).
  const UPoly<C> S(out.coeffs);
  std::vector<UPoly<C>> derivs{S};
  for (int k = 1; k <= r; ++k) derivs.push_back(derivs.back().derivative());
  RF res(0);
  for (int k = 0; k <= r; ++k) {
    const RF bk = k == r ? RF(1) : L.a[static_cast<std::size_t>(k)];
    if (bk.is_zero()) continue;
    RF inner(0);
    C binom(1);
    for (int i = 0; i <= k; ++i) {
      if (i > 0) binom = binom * C(k - i + 1) / C(i);
      const C f = binom * detail::falling<C>(rho, i);
      if (is_zero(f)) continue;
      inner += RF(derivs[static_cast<std::size_t>(k - i)] * f, UPoly<C>::monomial(C(1), i));
    }
    res += bk * inner;
  }
  if (res.is_zero()) {
    out.residual_valuation = std::numeric_limits<int>::max();
  } else {
    out.residual_valuation = res.num().valuation() - res.den().valuation() + r;
  }
  out.verified = out.residual_valuation > N;
  if (!out.verified) throw std::logic_error("Frobenius series failed its residual check");
  return out;
}

template <class C>
FrobeniusSeries<C> frobenius_series(const LinearODE<C>& L, const C& point, const C& rho, int N) {
  return frobenius_series_at_zero(centered_at(L, point), rho, N);
}

template <class C>
FrobeniusSeries<C> frobenius_series_at_infinity(const LinearODE<C>& L, const C& rho, int N) {
  return frobenius_series_at_zero(at_infinity(L), rho, N);
}

/// Column of a Riemann scheme.
template <class C>
struct SchemeColumn {
  std::string label;
  int points = 1;
  LocalExponents<C> exponents;
};

template <class C>
std::vector<SchemeColumn<C>> riemann_scheme(const LinearODE<C>& L) {
  std::vector<SchemeColumn<C>> out;
  for (const auto& p : singular_points(L)) out.push_back({p.to_string(L.var), p.points(), local_exponents(L, p)});
  return out;
}

/// Columns at explicit points (and infinity when `with_infinity`).
template <class C>
std::vector<SchemeColumn<C>> riemann_scheme(const LinearODE<C>& L, const std::vector<std::pair<std::string, C>>& points,
                                            bool with_infinity) {
  std::vector<SchemeColumn<C>> out;
  for (const auto& [label, x] : points) out.push_back({label, 1, local_exponents(L, x)});
  if (with_infinity) out.push_back({"inf", 1, local_exponents_at_infinity(L)});
  return out;
}

/// Sum of all exponents, counting each place with its number of points.
template <class C>
std::optional<C> exponent_sum(const std::vector<SchemeColumn<C>>& cols) {
  C s(0);
  for (const auto& c : cols) {
    if (!c.exponents.uniform || !c.exponents.split) return std::nullopt;
    for (const auto& e : c.exponents.exponents) s += e * C(c.points);
  }
  return s;
}

/// Table with one column per place and one row per exponent.
template <class C>
std::string format_riemann_scheme(const std::vector<SchemeColumn<C>>& cols) {
  std::vector<std::vector<std::string>> table;
  std::size_t rows = 0;
  for (const auto& c : cols) {
    std::vector<std::string> col{c.label};
    if (c.exponents.split) {
      for (const auto& e : c.exponents.exponents) col.push_back(detail::str(e));
    } else if (c.exponents.uniform) {
      col.push_back("roots of " + c.exponents.indicial.to_string("rho"));
    } else {
      col.push_back("varies");
    }
    rows = std::max(rows, col.size());
    table.push_back(std::move(col));
  }
  std::vector<std::size_t> width;
  for (const auto& col : table) {
    std::size_t w = 0;
    for (const auto& s : col) w = std::max(w, s.size());
    width.push_back(w);
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.size(); ++c) {
      const std::string s = r < table[c].size() ? table[c][r] : "";
      out << (c ? " | " : "") << s << std::string(width[c] - s.size(), ' ');
    }
    out << "\n";
    if (r == 0) {
      for (std::size_t c = 0; c < table.size(); ++c) out << (c ? "-+-" : "") << std::string(width[c], '-');
      out << "\n";
    }
  }
  return out.str();
}

/// Maps an equation over Q into a number field.
LinearODE<NFElem> lift_ode(const LinearODE<Rational>& L);

}  // namespace gdpf
