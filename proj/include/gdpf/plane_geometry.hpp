#pragma once

// Pointwise geometry of plane curves F(X,Y,Z) = 0 over an exact field:
// incidence, tangents, contact orders with lines, flexes and central
// projections from a point of the curve.

#include "gdpf/multipoly.hpp"
#include "gdpf/upoly.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace gdpf {

/// Homogeneous coordinates, not all zero. Stored as given; compare with ==.
template <class K>
struct ProjPoint {
  std::array<K, 3> x;

  ProjPoint() : x{K(0), K(0), K(1)} {}
  ProjPoint(K a, K b, K c) : x{std::move(a), std::move(b), std::move(c)} {
    if (gdpf::is_zero(x[0]) && gdpf::is_zero(x[1]) && gdpf::is_zero(x[2]))
      throw std::invalid_argument("projective point with all coordinates zero");
  }
  explicit ProjPoint(const std::array<K, 3>& a) : ProjPoint(a[0], a[1], a[2]) {}

  /// First nonzero coordinate scaled to 1.
  ProjPoint canonical() const {
    ProjPoint p = *this;
    for (const auto& c : x) {
      if (gdpf::is_zero(c)) continue;
      const K inv = K(1) / c;
      for (auto& y : p.x) y *= inv;
      break;
    }
    return p;
  }
  std::vector<K> coords() const { return {x[0], x[1], x[2]}; }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    // a x b = 0
    return a.x[1] * b.x[2] == a.x[2] * b.x[1] && a.x[2] * b.x[0] == a.x[0] * b.x[2] &&
           a.x[0] * b.x[1] == a.x[1] * b.x[0];
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  std::string to_string() const {
    const ProjPoint p = canonical();
    return "(" + gdpf::to_string(p.x[0]) + ":" + gdpf::to_string(p.x[1]) + ":" + gdpf::to_string(p.x[2]) + ")";
  }
};

/// The line a X + b Y + c Z = 0.
template <class K>
struct ProjLine {
  std::array<K, 3> a;

  ProjLine(K p, K q, K r) : a{std::move(p), std::move(q), std::move(r)} {
    if (gdpf::is_zero(a[0]) && gdpf::is_zero(a[1]) && gdpf::is_zero(a[2]))
      throw std::invalid_argument("line with all coefficients zero");
  }

  K operator()(const ProjPoint<K>& p) const { return a[0] * p.x[0] + a[1] * p.x[1] + a[2] * p.x[2]; }
  bool contains(const ProjPoint<K>& p) const { return gdpf::is_zero((*this)(p)); }
  ProjLine canonical() const {
    ProjPoint<K> p(a);
    p = p.canonical();
    return ProjLine(p.x[0], p.x[1], p.x[2]);
  }
  friend bool operator==(const ProjLine& l, const ProjLine& m) {
    return ProjPoint<K>(l.a) == ProjPoint<K>(m.a);
  }
  MultiPoly<K> as_poly(const VarNames& vars = xyz_names()) const {
    MultiPoly<K> r(vars);
    for (std::size_t i = 0; i < 3; ++i) r += MultiPoly<K>::variable(i, vars) * a[i];
    return r;
  }
  std::string to_string(const VarNames& vars = xyz_names()) const { return canonical().as_poly(vars).to_string() + " = 0"; }
};

template <class K>
std::array<K, 3> cross(const std::array<K, 3>& u, const std::array<K, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// The line through two distinct points.
template <class K>
ProjLine<K> line_through(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  if (p == q) throw std::invalid_argument("line_through: points coincide");
  const auto c = cross(p.x, q.x);
  return ProjLine<K>(c[0], c[1], c[2]);
}

template <class K>
ProjPoint<K> meet(const ProjLine<K>& l, const ProjLine<K>& m) {
  if (l == m) throw std::invalid_argument("meet: lines coincide");
  return ProjPoint<K>(cross(l.a, m.a));
}

class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sum_j v_j dF/dx_j
template <class K>
MultiPoly<K> directional_derivative(const MultiPoly<K>& f, const std::array<K, 3>& v) {
  MultiPoly<K> r(f.vars());
  for (std::size_t j = 0; j < 3; ++j)
    if (!gdpf::is_zero(v[j])) r += f.partial_derivative(j) * v[j];
  return r;
}

/// Taylor coefficients g_i of g(tau) = F(p + tau q), i = 0..deg F.
template <class K>
std::vector<K> restrict_to_line(const MultiPoly<K>& f, const ProjPoint<K>& p, const ProjPoint<K>& q) {
  std::vector<K> out;
  MultiPoly<K> d = f;
  K fact(1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (i > 0) {
      d = directional_derivative(d, q.x);
      fact *= K(i);
    }
    out.push_back(d.eval(p.coords()) / fact);
  }
  return out;
}

/// A point of the line different from p.
template <class K>
ProjPoint<K> second_point(const ProjLine<K>& l, const ProjPoint<K>& p) {
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<K, 3> e{K(0), K(0), K(0)};
    e[i] = K(1);
    const auto c = cross(l.a, e);
    if (gdpf::is_zero(c[0]) && gdpf::is_zero(c[1]) && gdpf::is_zero(c[2])) continue;
    ProjPoint<K> q(c);
    if (q != p) return q;
  }
  throw std::logic_error("second_point: no second point found");
}

/// Contact order of a line with a curve at a point, or "component".
struct Multiplicity {
  bool component = false;
  int value = 0;
  std::string to_string() const { return component ? "component" : std::to_string(value); }
};

template <class K>
Multiplicity intersection_multiplicity(const MultiPoly<K>& f, const ProjLine<K>& l, const ProjPoint<K>& p) {
  if (!l.contains(p)) throw std::invalid_argument("intersection_multiplicity: point is not on the line");
  const auto g = restrict_to_line(f, p, second_point(l, p));
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!gdpf::is_zero(g[i])) return {false, static_cast<int>(i)};
  return {true, 0};
}

/// Intersection of a line with the curve as a binary form: the points
/// sigma*p + tau*q correspond to the roots (sigma:tau).
template <class K>
struct LineSection {
  ProjPoint<K> p, q;
  bool component = false;
  /// Roots in K, with multiplicities; tau = 0 is the point p.
  std::vector<std::pair<ProjPoint<K>, int>> points;
  /// Product of the irreducible factors without roots in K, as a polynomial
  /// in x = sigma/tau, with its multiplicity structure kept.
  UPoly<K> unsplit;
  int total() const {
    int s = unsplit.degree() > 0 ? unsplit.degree() : 0;
    for (const auto& pt : points) s += pt.second;
    return s;
  }
};

/// All intersections of a line with the curve, with multiplicities.
template <class K>
LineSection<K> line_section(const MultiPoly<K>& f, const ProjLine<K>& l) {
  std::optional<ProjPoint<K>> first;
  for (std::size_t i = 0; i < 3 && !first; ++i) {
    std::array<K, 3> e{K(0), K(0), K(0)};
    e[i] = K(1);
    const auto c = cross(l.a, e);
    if (!(gdpf::is_zero(c[0]) && gdpf::is_zero(c[1]) && gdpf::is_zero(c[2]))) first = ProjPoint<K>(c);
  }
  const ProjPoint<K> p = *first;
  const ProjPoint<K> q = second_point(l, p);
  LineSection<K> out{p, q, false, {}, UPoly<K>()};
  const auto g = restrict_to_line(f, p, q);  // g[i]: coefficient of sigma^(d-i) tau^i
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<K> co(g.rbegin(), g.rend());  // polynomial in sigma with tau = 1
  UPoly<K> h(co);
  if (h.is_zero()) {
    out.component = true;
    return out;
  }
  if (h.degree() < d) out.points.emplace_back(p, d - h.degree());  // tau = 0
  UPoly<K> rest = h;
  if constexpr (std::is_same_v<K, Rational>) {
    for (const auto& [root, mult] : rational_roots(h)) {
      out.points.emplace_back(ProjPoint<K>(p.x[0] * root + q.x[0], p.x[1] * root + q.x[1], p.x[2] * root + q.x[2]), mult);
      for (int i = 0; i < mult; ++i) rest = exact_div(rest, UPoly<K>(std::vector<K>{-root, K(1)}));
    }
  }
  if (rest.degree() > 0) out.unsplit = rest.monic();
  return out;
}

template <class K>
std::vector<K> gradient_at(const MultiPoly<K>& f, const ProjPoint<K>& p) {
  std::vector<K> g;
  for (std::size_t i = 0; i < f.arity(); ++i) g.push_back(f.partial_derivative(i).eval(p.coords()));
  return g;
}

template <class K>
bool on_curve(const MultiPoly<K>& f, const ProjPoint<K>& p) {
  return gdpf::is_zero(f.eval(p.coords()));
}

/// True iff every partial derivative vanishes at p.
template <class K>
bool verify_singular(const MultiPoly<K>& f, const ProjPoint<K>& p) {
  for (const auto& g : gradient_at(f, p))
    if (!gdpf::is_zero(g)) return false;
  return true;
}

template <class K>
ProjLine<K> tangent_line(const MultiPoly<K>& f, const ProjPoint<K>& p) {
  if (!on_curve(f, p)) throw std::invalid_argument("tangent_line: point " + p.to_string() + " is not on the curve");
  const auto g = gradient_at(f, p);
  if (gdpf::is_zero(g[0]) && gdpf::is_zero(g[1]) && gdpf::is_zero(g[2]))
    throw SingularPoint("tangent_line: curve is singular at " + p.to_string());
  return ProjLine<K>(g[0], g[1], g[2]);
}

enum class FlexKind { ordinary, flex, hyperflex };

inline std::string to_string(FlexKind k) {
  switch (k) {
    case FlexKind::ordinary:
      return "ordinary";
    case FlexKind::flex:
      return "flex";
    case FlexKind::hyperflex:
      return "hyperflex";
  }
  return "?";
}

struct FlexClass {
  FlexKind kind = FlexKind::ordinary;
  int multiplicity = 2;
  std::string to_string() const { return gdpf::to_string(kind) + "(" + std::to_string(multiplicity) + ")"; }
};

template <class K>
FlexClass classify_flex(const MultiPoly<K>& f, const ProjPoint<K>& p) {
  const ProjLine<K> t = tangent_line(f, p);
  const Multiplicity m = intersection_multiplicity(f, t, p);
  if (m.component) throw std::domain_error("classify_flex: the tangent line is a component of the curve");
  FlexClass c;
  c.multiplicity = m.value;
  c.kind = m.value == 2 ? FlexKind::ordinary : m.value == 3 ? FlexKind::flex : FlexKind::hyperflex;
  return c;
}

/// Fiber of a central projection over a place of P^1: a monic square-free
/// polynomial in the affine coordinate alpha (or infinity), the number of
/// geometric points, and the ramification partition of each of them.
template <class K>
struct BranchPlace {
  bool infinity = false;
  UPoly<K> poly;
  /// Sum of (e - 1) over the fiber above each geometric point of the place.
  int order = 0;
  std::vector<int> partition;
  int points() const { return infinity ? 1 : poly.degree(); }
  std::string to_string(const std::string& var = "a") const {
    if (infinity) return "inf";
    if (poly.degree() == 1) return gdpf::to_string(-poly.coeff(0));
    return poly.to_string(var) + " = 0";
  }
};

/// (X:Y:Z) -> (l1 : l2) with l1, l2 independent lines through the center.
template <class K>
struct ProjectionMap {
  MultiPoly<K> curve;
  ProjPoint<K> center;
  ProjLine<K> l1, l2;
  int degree = 0;
  /// Points with l1 = 1, l2 = 0 and l1 = 0, l2 = 1 spanning a complement of
  /// the center.
  ProjPoint<K> p1, p2;
  /// Binary cubic coefficients f_i(alpha) of sigma^i tau^(d-1-i) along the
  /// line through the center and alpha*p1 + p2.
  std::vector<UPoly<K>> fiber_form;
  /// Homogeneous discriminant in (alpha : 1), with its total degree.
  UPoly<K> discriminant;
  int discriminant_degree = 0;
  std::vector<BranchPlace<K>> branch;

  /// Image of a point of the curve as (l1 : l2); the center maps to its
  /// tangent direction.
  std::pair<K, K> image(const ProjPoint<K>& p) const {
    if (p != center) return {l1(p), l2(p)};
    const ProjLine<K> t = tangent_line(curve, center);
    // t = beta*l1 - alpha*l2 as linear forms.
    const ProjPoint<K> w = meet(t, line_through(p1, p2));
    return {l1(w), l2(w)};
  }

  int total_ramification() const {
    int s = 0;
    for (const auto& b : branch) s += b.order * b.points();
    return s;
  }

  /// The branch place containing the image point, if any.
  std::optional<BranchPlace<K>> branch_at(const std::pair<K, K>& v) const {
    for (const auto& b : branch) {
      if (b.infinity) {
        if (gdpf::is_zero(v.second)) return b;
      } else if (!gdpf::is_zero(v.second) && gdpf::is_zero(b.poly.eval(K(v.first / v.second)))) {
        return b;
      }
    }
    return std::nullopt;
  }
};

namespace detail {

/// Discriminant of a x^3 + b x^2 y + c x y^2 + d y^3.
template <class R>
R binary_cubic_discriminant(const R& a, const R& b, const R& c, const R& d) {
  return b * b * c * c - R(4) * a * c * c * c - R(4) * b * b * b * d - R(27) * a * a * d * d +
         R(18) * a * b * c * d;
}

/// Lines through c, preferring coordinate-like forms first.
template <class K>
std::pair<ProjLine<K>, ProjLine<K>> lines_through(const ProjPoint<K>& c) {
  std::vector<ProjLine<K>> cand;
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<K, 3> e{K(0), K(0), K(0)};
    e[i] = K(1);
    const auto l = cross(c.x, e);
    if (gdpf::is_zero(l[0]) && gdpf::is_zero(l[1]) && gdpf::is_zero(l[2])) continue;
    cand.push_back(ProjLine<K>(l[0], l[1], l[2]).canonical());
  }
  auto first_nonzero = [](const ProjLine<K>& l) {
    std::size_t i = 0;
    while (gdpf::is_zero(l.a[i])) ++i;
    return i;
  };
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (i == j || cand[i] == cand[j]) continue;
      if (first_nonzero(cand[i]) < first_nonzero(cand[j]) ||
          (first_nonzero(cand[i]) == first_nonzero(cand[j]) && i < j))
        return {cand[i], cand[j]};
    }
  throw std::logic_error("lines_through: degenerate center");
}

}  // namespace detail

/// Central projection of a smooth plane curve of degree d from a smooth point
/// c on it: a map of degree d - 1. Branching is read off the discriminant of
/// the residual binary form of the pencil.
template <class K>
ProjectionMap<K> central_projection(const MultiPoly<K>& f, const ProjPoint<K>& c) {
  if (!on_curve(f, c)) throw std::invalid_argument("central_projection: center " + c.to_string() + " is not on the curve");
  if (verify_singular(f, c)) throw SingularPoint("central_projection: center " + c.to_string() + " is singular");
  const int d = f.degree();
  if (d != 4) throw std::invalid_argument("central_projection: only quartics are supported");
  auto [l1, l2] = detail::lines_through(c);
  // Dual basis: p1 on l2 with l1 = 1, p2 on l1 with l2 = 1, both off c.
  auto pick = [&](const ProjLine<K>& on, const ProjLine<K>& val) {
    // Any point of `on` other than c, scaled so val = 1.
    ProjPoint<K> q = second_point(on, c);
    const K s = K(1) / val(q);
    return ProjPoint<K>(q.x[0] * s, q.x[1] * s, q.x[2] * s);
  };
  const ProjPoint<K> p1 = pick(l2, l1);
  const ProjPoint<K> p2 = pick(l1, l2);

  ProjectionMap<K> m{f, c, l1, l2, d - 1, p1, p2, {}, {}, 0, {}};
  // F(sigma c + tau w) / tau with w = alpha p1 + p2: coefficients
  // f_i = (D_c^i F)(w) / i!, i = 0..d-1.
  std::vector<UPoly<K>> w;
  for (std::size_t j = 0; j < 3; ++j) w.push_back(UPoly<K>(std::vector<K>{p2.x[j], p1.x[j]}));
  MultiPoly<K> dc = f;
  K fact(1);
  std::vector<UPoly<K>> fi;
  for (int i = 0; i < d; ++i) {
    if (i > 0) {
      dc = directional_derivative(dc, c.x);
      fact *= K(i);
    }
    fi.push_back(dc.eval(w) * (K(1) / fact));
  }
  m.fiber_form = fi;
  // sigma^3: f_3 (the tangent condition), ..., tau^3: f_0.
  m.discriminant = detail::binary_cubic_discriminant(fi[3], fi[2], fi[1], fi[0]);
  // Coefficient weights 1..4 make the discriminant a form of degree 10.
  m.discriminant_degree = 10;
  if (m.discriminant.is_zero()) throw SingularPoint("central_projection: the curve is singular or non-reduced");
  const int inf_order = m.discriminant_degree - m.discriminant.degree();
  const auto parts = squarefree_decomposition(m.discriminant);
  auto partition = [](int order) {
    // A fiber of a degree-3 map with sum(e-1) = order has 3 - order points.
    if (order == 1) return std::vector<int>{2, 1};
    if (order == 2) return std::vector<int>{3};
    return std::vector<int>{};
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    const int order = static_cast<int>(i) + 1;
    if constexpr (std::is_same_v<K, Rational>) {
      UPoly<K> rest = parts[i];
      for (const auto& [root, mult] : rational_roots(parts[i])) {
        UPoly<K> lin(std::vector<K>{-root, K(1)});
        m.branch.push_back({false, lin, order, partition(order)});
        rest = exact_div(rest, lin);
      }
      if (rest.degree() > 0) m.branch.push_back({false, rest.monic(), order, partition(order)});
    } else {
      m.branch.push_back({false, parts[i], order, partition(order)});
    }
  }
  if (inf_order > 0) m.branch.push_back({true, UPoly<K>(), inf_order, partition(inf_order)});
  return m;
}

/// Ramification indices of the fiber over (alpha : beta), computed directly
/// from the residual cubic (roots outside K are grouped per factor).
template <class K>
std::vector<int> fiber_partition(const ProjectionMap<K>& m, const std::pair<K, K>& v) {
  // Evaluate the homogeneous coefficients at (alpha : beta).
  std::vector<K> co;
  for (std::size_t i = 0; i < m.fiber_form.size(); ++i) {
    const int deg = static_cast<int>(m.fiber_form.size()) - static_cast<int>(i);  // homogeneous degree
    K s(0);
    K bp(1);
    const auto& p = m.fiber_form[i];
    // sum_k p_k alpha^k beta^(deg-k)
    for (int k = deg; k >= 0; --k) {
      K term = p.coeff(k);
      for (int j = 0; j < k; ++j) term *= v.first;
      s += term * bp;
      bp *= v.second;
    }
    co.push_back(s);
  }
  // Binary form sum_i co[i] sigma^i tau^(n-i); roots at tau = 0 have
  // multiplicity n - deg in sigma.
  UPoly<K> g(co);
  const int n = static_cast<int>(co.size()) - 1;
  std::vector<int> out;
  if (g.is_zero()) return out;
  if (g.degree() < n) out.push_back(n - g.degree());
  const auto parts = squarefree_decomposition(g);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int k = 0; k < parts[i].degree(); ++k) out.push_back(static_cast<int>(i) + 1);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace gdpf
