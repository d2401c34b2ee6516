#include "gdpf/number_field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace gdpf {

namespace {

void reduce_coords(std::vector<NFElem>& c, const std::vector<NFElem>& m) {
  const std::size_t d = m.size() - 1;
  while (c.size() > d) {
    const NFElem top = c.back();
    c.pop_back();
    if (top.is_zero()) continue;
    const std::size_t shift = c.size() - d;
    for (std::size_t j = 0; j < d; ++j) c[shift + j] -= top * m[j];
  }
  c.resize(d, NFElem(0));
}

// Solves M y = rhs over the base field by Gauss-Jordan elimination.
std::vector<NFElem> solve_square(std::vector<std::vector<NFElem>> m, std::vector<NFElem> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("zero divisor in number field (minimal polynomial reducible?)");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const NFElem inv = m[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const NFElem f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

// -- NumberField -----------------------------------------------------------

NumberField::NumberField(FieldHandle base, std::vector<NFElem> minpoly, std::string generator_name,
                         bool irreducibility_verified)
    : base_(std::move(base)),
      minpoly_(std::move(minpoly)),
      name_(std::move(generator_name)),
      verified_(irreducibility_verified) {}

int NumberField::absolute_degree() const { return degree() * gdpf::absolute_degree(base_); }

int NumberField::depth() const { return base_ ? base_->depth() + 1 : 1; }

int absolute_degree(const FieldHandle& f) { return f ? f->absolute_degree() : 1; }

bool is_subfield(const FieldHandle& ancestor, const FieldHandle& f) {
  if (!ancestor) return true;
  for (const NumberField* p = f.get(); p != nullptr; p = p->base().get())
    if (p == ancestor.get()) return true;
  return false;
}

FieldHandle common_field(const FieldHandle& a, const FieldHandle& b) {
  if (a == b) return a;
  if (is_subfield(a, b)) return b;
  if (is_subfield(b, a)) return a;
  throw std::domain_error("elements belong to unrelated number fields");
}

NFElem lift(const NFElem& a, const FieldHandle& target) {
  if (a.field() == target) return a;
  if (!target) throw std::domain_error("cannot lower an algebraic element to Q");
  NFElem below = lift(a, target->base());
  std::vector<NFElem> c(static_cast<std::size_t>(target->degree()), NFElem(0));
  c[0] = std::move(below);
  return NFElem::from_coords(target, std::move(c));
}

// -- NFElem ----------------------------------------------------------------

NFElem NFElem::from_coords(FieldHandle field, std::vector<NFElem> coords) {
  if (!field) {
    if (coords.size() > 1) throw std::invalid_argument("Q has a single coordinate");
    return coords.empty() ? NFElem(0) : lift(coords[0], nullptr);
  }
  for (auto& c : coords) c = lift(c, field->base());
  if (coords.size() >= static_cast<std::size_t>(field->degree()))
    reduce_coords(coords, field->minpoly());
  else
    coords.resize(static_cast<std::size_t>(field->degree()), NFElem(0));
  NFElem r;
  r.field_ = std::move(field);
  r.c_ = std::move(coords);
  for (auto& c : r.c_)
    if (c.field() != r.field_->base()) c = lift(c, r.field_->base());
  return r;
}

NFElem NFElem::generator(const FieldHandle& field) {
  if (!field) throw std::invalid_argument("Q has no generator");
  std::vector<NFElem> c{NFElem(0), NFElem(1)};
  return from_coords(field, std::move(c));
}

bool NFElem::is_zero() const {
  if (!field_) return sgn(q_) == 0;
  return std::all_of(c_.begin(), c_.end(), [](const NFElem& x) { return x.is_zero(); });
}

bool NFElem::is_rational() const {
  if (!field_) return true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return c_[0].is_rational();
}

Rational NFElem::to_rational() const {
  if (!is_rational()) throw std::domain_error("element " + to_string(*this) + " is not rational");
  return field_ ? c_[0].to_rational() : q_;
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  if (!field_) {
    r.q_ = -q_;
  } else {
    for (auto& c : r.c_) c = -c;
  }
  return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
  if (field_ != o.field_) {
    FieldHandle f = common_field(field_, o.field_);
    *this = lift(*this, f);
    return *this += lift(o, f);
  }
  if (!field_) {
    q_ += o.q_;
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) { return *this += -o; }

NFElem& NFElem::operator*=(const NFElem& o) {
  if (field_ != o.field_) {
    // Scalars from a subfield act coordinate-wise.
    if (is_subfield(o.field_, field_) && o.field_ != field_) {
      if (!field_) return *this = lift(*this, o.field_) *= o;
      for (auto& c : c_) c *= o;
      return *this;
    }
    if (is_subfield(field_, o.field_)) {
      NFElem r = o;
      return *this = (r *= *this);
    }
    throw std::domain_error("elements belong to unrelated number fields");
  }
  if (!field_) {
    q_ *= o.q_;
    return *this;
  }
  const std::size_t d = c_.size();
  std::vector<NFElem> prod(2 * d - 1, NFElem(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_coords(prod, field_->minpoly());
  c_ = std::move(prod);
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in number field");
  if (!field_) return NFElem(Rational(1) / q_);
  const std::size_t d = c_.size();
  // Column j of the multiplication matrix holds the coordinates of a*x^j.
  std::vector<std::vector<NFElem>> m(d, std::vector<NFElem>(d));
  NFElem basis = NFElem::from_coords(field_, {NFElem(1)});
  const NFElem gen = generator(field_);
  for (std::size_t j = 0; j < d; ++j) {
    const NFElem col = *this * basis;
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    basis *= gen;
  }
  std::vector<NFElem> rhs(d, NFElem(0));
  rhs[0] = NFElem(1);
  return from_coords(field_, solve_square(std::move(m), std::move(rhs)));
}

NFElem& NFElem::operator/=(const NFElem& o) { return *this *= o.inverse(); }

NFElem NFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const NFElem& a, const NFElem& b) {
  if (a.field_ != b.field_) {
    FieldHandle f = common_field(a.field_, b.field_);
    return lift(a, f) == lift(b, f);
  }
  if (!a.field_) return a.q_ == b.q_;
  return a.c_ == b.c_;
}

std::string to_string(const NFElem& a) {
  if (!a.field()) return to_string(a.rational_value());
  const auto& c = a.coords();
  const std::string& g = a.field()->generator_name();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
    if (c[i].is_rational()) {
      Rational q = c[i].to_rational();
      const bool neg = sgn(q) < 0;
      if (neg) q = -q;
      out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mono.empty())
        out << q.get_str();
      else if (q == 1)
        out << mono;
      else
        out << q.get_str() << "*" << mono;
    } else {
      out << (first ? "" : " + ") << "(" << to_string(c[i]) << ")";
      if (!mono.empty()) out << "*" << mono;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

NFElem apply_generator_map(const NFElem& x, const NFElem& image) {
  if (!x.field()) return x;
  if (x.field()->base()) throw std::domain_error("generator maps are only defined on fields over Q");
  NFElem r(0);
  for (std::size_t i = x.coords().size(); i-- > 0;) r = r * image + x.coords()[i];
  return r;
}

// -- Irreducibility --------------------------------------------------------

namespace {

using IntPoly = std::vector<BigInt>;

IntPoly primitive_integer(const std::vector<Rational>& p) {
  BigInt l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    r.push_back(v);
  }
  if (g != 0)
    for (auto& v : r) v /= g;
  if (r.back() < 0)
    for (auto& v : r) v = -v;
  return r;
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
  BigInt r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// Remainder of a divided by monic-or-not b over Q.
std::vector<Rational> rem_q(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<Rational> make_monic(std::vector<Rational> p) {
  const Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

// Lagrange interpolation through (x_i, y_i) with rational arithmetic.
std::vector<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t k = 0; k < n; ++k) result[k] += basis[k] * scale;
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

}  // namespace

IrreducibilityReport irreducible_over_q(const std::vector<Rational>& poly) {
  std::vector<Rational> p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() < 2) throw std::invalid_argument("irreducibility test needs degree >= 1");
  IrreducibilityReport rep;
  const std::size_t n = p.size() - 1;
  if (n == 1) {
    rep.decided = rep.irreducible = true;
    return rep;
  }
  const IntPoly g = primitive_integer(p);
  std::vector<Rational> gq(g.begin(), g.end());

  // Rational roots.
  if (g[0] == 0) {
    rep.decided = true;
    rep.factor = {Rational(0), Rational(1)};
    return rep;
  }
  auto num_divs = positive_divisors(g[0]);
  auto den_divs = positive_divisors(g.back());
  if (!num_divs || !den_divs) return rep;
  for (const auto& a : *num_divs) {
    for (const auto& b : *den_divs) {
      for (int sign : {1, -1}) {
        Rational r(BigInt(sign) * a, b);
        r.canonicalize();
        Rational acc = 0;
        for (std::size_t i = gq.size(); i-- > 0;) acc = acc * r + gq[i];
        if (acc == 0) {
          rep.decided = true;
          rep.factor = {-r, Rational(1)};
          return rep;
        }
      }
    }
  }
  if (n <= 3) {
    rep.decided = rep.irreducible = true;
    return rep;
  }
  if (n > 6) return rep;

  // Kronecker: search integer factors of degree k = 2..n/2 through their
  // values at k+1 integer points.
  std::vector<std::pair<BigInt, BigInt>> pts;  // (x, g(x))
  for (int i = 0; pts.size() < 12 && i < 40; ++i) {
    const BigInt x = (i % 2 == 0) ? BigInt(i / 2) : BigInt(-(i + 1) / 2);
    const BigInt y = eval_int(g, x);
    if (y != 0) pts.emplace_back(x, y);
  }
  for (std::size_t k = 2; k <= n / 2; ++k) {
    std::vector<std::pair<BigInt, std::vector<BigInt>>> chosen;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (divisor count, index)
    std::vector<std::vector<BigInt>> divs_at;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto d = positive_divisors(pts[i].second);
      if (!d) return rep;
      order.emplace_back(d->size(), i);
      divs_at.push_back(std::move(*d));
    }
    std::sort(order.begin(), order.end());
    if (order.size() < k + 1) return rep;
    std::vector<BigInt> xs;
    std::vector<const std::vector<BigInt>*> ds;
    for (std::size_t i = 0; i <= k; ++i) {
      xs.push_back(pts[order[i].second].first);
      ds.push_back(&divs_at[order[i].second]);
    }
    std::vector<std::size_t> idx(k + 1, 0);
    std::vector<int> sgns(k + 1, 1);
    // Enumerate all sign/divisor assignments; the first value is taken positive.
    std::size_t total = 1;
    for (std::size_t i = 0; i <= k; ++i) total *= ds[i]->size() * (i == 0 ? 1 : 2);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      std::vector<BigInt> ys(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t m = ds[i]->size() * (i == 0 ? 1 : 2);
        const std::size_t pick = c % m;
        c /= m;
        const BigInt& dv = (*ds[i])[pick % ds[i]->size()];
        ys[i] = (pick >= ds[i]->size()) ? BigInt(-dv) : dv;
      }
      std::vector<Rational> h = interpolate(xs, ys);
      if (h.size() != k + 1) continue;
      bool integral = std::all_of(h.begin(), h.end(), [](const Rational& q) { return q.get_den() == 1; });
      if (!integral) continue;
      if (rem_q(gq, h).empty()) {
        rep.decided = true;
        rep.factor = make_monic(h);
        return rep;
      }
    }
  }
  rep.decided = rep.irreducible = true;
  return rep;
}

namespace {

long mod_pos(const BigInt& a, long p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r.get_si();
}

long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  long b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Image of a rational in F_p, or nullopt if p divides the denominator.
std::optional<long> reduce_q(const Rational& q, long p) {
  const long d = mod_pos(q.get_den(), p);
  if (d == 0) return std::nullopt;
  return mod_pos(q.get_num(), p) * inv_mod(d, p) % p;
}

// Certifies that a polynomial of degree <= 3 over a depth-one number field
// has no root there, by finding a degree-one prime at which its reduction has
// no root in F_p.
bool no_root_certificate(const std::vector<NFElem>& poly, const FieldHandle& base) {
  if (!base || base->base()) return false;
  std::vector<Rational> m;
  for (const auto& c : base->minpoly()) m.push_back(c.to_rational());
  for (long p = 3; p < 2000; p += 2) {
    bool prime = true;
    for (long q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    std::vector<long> mp;
    bool ok = true;
    for (const auto& c : m) {
      auto r = reduce_q(c, p);
      if (!r) ok = false;
      mp.push_back(r.value_or(0));
    }
    if (!ok) continue;
    for (long r = 0; r < p; ++r) {
      long val = 0, der = 0;
      for (std::size_t i = mp.size(); i-- > 0;) {
        der = (der * r + val) % p;
        val = (val * r + mp[i]) % p;
      }
      if (val != 0 || der == 0) continue;  // need a simple root of the minimal polynomial
      std::vector<long> red;
      bool integral = true;
      for (const auto& c : poly) {
        long acc = 0;
        const auto& coords = c.coords();
        for (std::size_t i = coords.size(); i-- > 0;) {
          auto cq = reduce_q(coords[i].to_rational(), p);
          if (!cq) integral = false;
          acc = (acc * r + cq.value_or(0)) % p;
        }
        red.push_back(acc);
      }
      if (!integral || red.back() == 0) continue;
      bool has_root = false;
      for (long x = 0; x < p && !has_root; ++x) {
        long acc = 0;
        for (std::size_t i = red.size(); i-- > 0;) acc = (acc * x + red[i]) % p;
        has_root = acc == 0;
      }
      if (!has_root) return true;
    }
  }
  return false;
}

}  // namespace

FieldHandle nf_create(std::vector<NFElem> minpoly, FieldHandle base, std::string name) {
  for (auto& c : minpoly) c = lift(c, base);
  while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
  if (minpoly.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  const NFElem lc_inv = minpoly.back().inverse();
  for (auto& c : minpoly) c *= lc_inv;
  if (minpoly.size() == 2) return base;

  bool verified = false;
  if (!base) {
    std::vector<Rational> q;
    for (const auto& c : minpoly) q.push_back(c.to_rational());
    const IrreducibilityReport rep = irreducible_over_q(q);
    if (rep.decided && !rep.irreducible) {
      std::vector<NFElem> f(rep.factor.begin(), rep.factor.end());
      throw ReducibleMinpoly("minimal polynomial is reducible over Q", std::move(f));
    }
    verified = rep.decided;
  } else if (minpoly.size() <= 4) {
    verified = no_root_certificate(minpoly, base);
  }
  return std::make_shared<const NumberField>(std::move(base), std::move(minpoly), std::move(name), verified);
}

// -- Kenyon-Smillie fields -------------------------------------------------

const FieldHandle& cubic_field() {
  static const FieldHandle f = nf_create({NFElem(1), NFElem(-3), NFElem(0), NFElem(1)}, nullptr, "v");
  return f;
}

const FieldHandle& cyclotomic9() {
  static const FieldHandle f = [] {
    FieldHandle k = nf_create({NFElem(1), NFElem(0), NFElem(0), NFElem(1), NFElem(0), NFElem(0), NFElem(1)},
                              nullptr, "zeta9");
    const NFElem z = NFElem::generator(k);
    const NFElem v = z + z.pow(8);
    if (!(v * v * v - NFElem(3) * v + NFElem(1)).is_zero())
      throw std::logic_error("zeta9 + zeta9^8 does not satisfy v^3 - 3v + 1");
    return k;
  }();
  return f;
}

const FieldHandle& orbifold_tower() {
  static const FieldHandle f = [] {
    const NFElem z3 = NFElem::generator(cyclotomic9()).pow(3);
    return nf_create({-(z3 / NFElem(3)), NFElem(0), NFElem(0), NFElem(1)}, cyclotomic9(), "u");
  }();
  return f;
}

NFElem zeta9() { return NFElem::generator(cyclotomic9()); }
NFElem zeta3() { return zeta9().pow(3); }
NFElem v_in_cyclotomic() {
  const NFElem z = zeta9();
  return z + z.pow(8);
}

std::string to_string(GaloisConvention c) { return c == GaloisConvention::full ? "full" : "fix-zeta3"; }

GaloisConvention parse_convention(const std::string& text) {
  if (text == "full") return GaloisConvention::full;
  if (text == "fix-zeta3" || text == "fix_zeta3") return GaloisConvention::fix_zeta3;
  throw std::invalid_argument("unknown Galois convention '" + text + "' (expected full|fix-zeta3)");
}

std::array<int, 3> galois_exponents(GaloisConvention c) {
  // zeta -> zeta^4 sends v to 2 - v - v^2; zeta^7 and zeta^2 both send v to v^2 - 2.
  return c == GaloisConvention::full ? std::array<int, 3>{1, 4, 2} : std::array<int, 3>{1, 4, 7};
}

std::array<NFElem, 3> galois_conjugates(const NFElem& x, GaloisConvention c) {
  if (x.is_rational()) return {x, x, x};
  if (x.field() == cubic_field()) {
    const NFElem v = NFElem::generator(cubic_field());
    return {x, apply_generator_map(x, NFElem(2) - v - v * v), apply_generator_map(x, v * v - NFElem(2))};
  }
  if (x.field() == cyclotomic9()) {
    const NFElem z = zeta9();
    const auto k = galois_exponents(c);
    return {apply_generator_map(x, z.pow(k[0])), apply_generator_map(x, z.pow(k[1])),
            apply_generator_map(x, z.pow(k[2]))};
  }
  throw std::domain_error("Galois conjugates are only available on Q(v) and Q(zeta9)");
}

NFElem cubic_to_cyclotomic(const NFElem& x) {
  if (x.is_rational()) return lift(NFElem(x.to_rational()), cyclotomic9());
  if (x.field() != cubic_field()) throw std::domain_error("expected an element of Q(v)");
  return apply_generator_map(x, v_in_cyclotomic());
}

}  // namespace gdpf
