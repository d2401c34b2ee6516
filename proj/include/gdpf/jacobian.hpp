#pragma once

// Graded pieces of the Jacobian ring K[x]/J(F) of a homogeneous polynomial:
// membership with cofactor certificates, quotient bases and smoothness.

#include "gdpf/echelon.hpp"
#include "gdpf/multipoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpf {

/// Witness that target = sum_i cofactors[i] * dF/dx_i.
template <class K>
struct CofactorCertificate {
  MultiPoly<K> target;
  std::vector<MultiPoly<K>> cofactors;
  MultiPoly<K> curve;

  bool verify() const {
    MultiPoly<K> sum(curve.vars());
    for (std::size_t i = 0; i < cofactors.size(); ++i) sum += cofactors[i] * curve.partial_derivative(i);
    if (sum != target) return false;
    const int expected = target.degree() - (curve.degree() - 1);
    for (const auto& g : cofactors)
      if (!g.is_zero() && (!g.is_homogeneous() || g.degree() != expected)) return false;
    return true;
  }
};

/// Monomials whose residues form a basis of (K[x]/J(F))_m.
struct GradedQuotientBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  /// True when the preferred monomials x_i^m did not all survive.
  bool fallback = false;
  std::size_t size() const { return monomials.size(); }
};

class SingularCurve : public std::domain_error {
 public:
  SingularCurve(const std::string& what, std::optional<std::vector<Rational>> witness)
      : std::domain_error(what), witness_(std::move(witness)) {}
  /// A rational common zero of the partials, when one was found.
  const std::optional<std::vector<Rational>>& witness() const { return witness_; }

 private:
  std::optional<std::vector<Rational>> witness_;
};

/// Graded linear algebra for J(F), cached per degree.
template <class K>
class JacobianRing {
 public:
  explicit JacobianRing(MultiPoly<K> f) : f_(std::move(f)) {
    if (!f_.is_homogeneous() || f_.degree() < 1) throw std::invalid_argument("curve must be homogeneous");
    for (std::size_t i = 0; i < f_.arity(); ++i) partials_.push_back(f_.partial_derivative(i));
  }

  const MultiPoly<K>& curve() const { return f_; }
  const std::vector<MultiPoly<K>>& partials() const { return partials_; }
  int curve_degree() const { return f_.degree(); }
  std::size_t arity() const { return f_.arity(); }

  /// dim (K[x]/J)_m.
  std::size_t quotient_dimension(int m) const { return piece(m).echelon.columns() - piece(m).echelon.rank(); }

  GradedQuotientBasis quotient_basis(int m) const {
    const Piece& p = piece(m);
    GradedQuotientBasis b;
    b.degree = m;
    for (int c : p.echelon.free_columns()) b.monomials.push_back(p.columns[static_cast<std::size_t>(c)]);
    for (const auto& mono : b.monomials) {
      bool pure = false;
      for (std::size_t i = 0; i < mono.size(); ++i) pure = pure || mono[i] == m;
      if (!pure) b.fallback = true;
    }
    return b;
  }

  struct Reduction {
    std::vector<K> coords;  // against quotient_basis(deg P)
    CofactorCertificate<K> certificate;  // target = P - basis part
  };

  /// Splits P into basis part plus an element of J with certificate.
  Reduction reduce(const MultiPoly<K>& p, int degree) const {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != degree))
      throw std::invalid_argument("reduce: polynomial is not homogeneous of degree " + std::to_string(degree));
    const Piece& pc = piece(degree);
    SparseVec<K> v;
    for (const auto& [e, c] : p.terms()) v.e.emplace_back(pc.index.at(e), c);
    std::sort(v.e.begin(), v.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto red = pc.echelon.reduce(std::move(v));

    Reduction out;
    const auto free = pc.echelon.free_columns();
    out.coords.assign(free.size(), K(0));
    MultiPoly<K> basis_part(f_.vars());
    for (const auto& [c, val] : red.remainder.e) {
      const auto pos = std::find(free.begin(), free.end(), c) - free.begin();
      out.coords[static_cast<std::size_t>(pos)] = val;
      basis_part.add_term(pc.columns[static_cast<std::size_t>(c)], val);
    }
    std::vector<MultiPoly<K>> cof(arity(), MultiPoly<K>(f_.vars()));
    for (const auto& [g, val] : red.combo.e) {
      const auto& [var, mono] = pc.generators[static_cast<std::size_t>(g)];
      cof[var].add_term(mono, val);
    }
    out.certificate = CofactorCertificate<K>{p - basis_part, std::move(cof), f_};
    if (!out.certificate.verify()) throw std::logic_error("cofactor certificate failed to verify");
    return out;
  }

 private:
  struct Piece {
    std::vector<Monomial> columns;
    std::map<Monomial, int> index;
    std::vector<std::pair<std::size_t, Monomial>> generators;  // (partial, multiplier)
    TrackedEchelon<K> echelon;
  };

  const Piece& piece(int m) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = pieces_.find(m);
    if (it != pieces_.end()) return *it->second;
    auto p = std::make_unique<Piece>();
    const int n = static_cast<int>(arity());
    // Preferred monomials x_i^m go last so they become free columns whenever
    // they are independent modulo J.
    std::vector<Monomial> preferred;
    for (const auto& mono : monomials_of_degree(n, m)) {
      bool pure = false;
      for (int e : mono) pure = pure || e == m;
      if (pure && m > 0)
        preferred.push_back(mono);
      else
        p->columns.push_back(mono);
    }
    p->columns.insert(p->columns.end(), preferred.begin(), preferred.end());
    for (std::size_t c = 0; c < p->columns.size(); ++c) p->index[p->columns[c]] = static_cast<int>(c);
    std::vector<SparseVec<K>> gens;
    const int gdeg = m - (f_.degree() - 1);
    if (gdeg >= 0) {
      for (std::size_t i = 0; i < arity(); ++i) {
        for (const auto& mu : monomials_of_degree(n, gdeg)) {
          SparseVec<K> v;
          for (const auto& [e, c] : partials_[i].terms()) {
            Monomial f = e;
            for (std::size_t k = 0; k < f.size(); ++k) f[k] += mu[k];
            v.e.emplace_back(p->index.at(f), c);
          }
          std::sort(v.e.begin(), v.e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          p->generators.emplace_back(i, mu);
          gens.push_back(std::move(v));
        }
      }
    }
    p->echelon = TrackedEchelon<K>(static_cast<int>(p->columns.size()), gens);
    return *pieces_.emplace(m, std::move(p)).first->second;
  }

  MultiPoly<K> f_;
  std::vector<MultiPoly<K>> partials_;
  mutable std::map<int, std::unique_ptr<Piece>> pieces_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
};

/// Outcome of graded_membership.
template <class K>
struct MembershipResult {
  bool member = false;
  std::optional<CofactorCertificate<K>> certificate;
  /// Residue of P in the graded quotient when not a member.
  MultiPoly<K> residue;
};

template <class K>
MembershipResult<K> graded_membership(const MultiPoly<K>& p, const JacobianRing<K>& ring) {
  MembershipResult<K> out{false, std::nullopt, MultiPoly<K>(p.vars())};
  if (p.is_zero()) {
    out.member = true;
    out.certificate = CofactorCertificate<K>{
        p, std::vector<MultiPoly<K>>(ring.arity(), MultiPoly<K>(p.vars())), ring.curve()};
    return out;
  }
  if (!p.is_homogeneous()) throw std::invalid_argument("graded_membership needs a homogeneous polynomial");
  auto red = ring.reduce(p, p.degree());
  const auto basis = ring.quotient_basis(p.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) out.residue.add_term(basis.monomials[i], red.coords[i]);
  out.member = out.residue.is_zero();
  if (out.member) out.certificate = std::move(red.certificate);
  return out;
}

template <class K>
MembershipResult<K> graded_membership(const MultiPoly<K>& p, const MultiPoly<K>& f) {
  return graded_membership(p, JacobianRing<K>(f));
}

/// Searches small rational points for a common zero of the partials.
template <class K>
std::optional<std::vector<Rational>> find_singular_witness(const JacobianRing<K>& ring, int bound = 3);

/// Smoothness via vanishing of the quotient in degree arity*(d-2)+1. Over a
/// rational-function field this decides smoothness of the generic fiber.
template <class K>
bool is_smooth(const JacobianRing<K>& ring) {
  const int d = ring.curve_degree();
  if (d < 2) return true;
  const int top = static_cast<int>(ring.arity()) * (d - 2) + 1;
  return ring.quotient_dimension(top) == 0;
}

template <class K>
bool is_smooth(const MultiPoly<K>& f) {
  return is_smooth(JacobianRing<K>(f));
}

/// quotient_basis that refuses singular curves.
template <class K>
GradedQuotientBasis quotient_basis(const JacobianRing<K>& ring, int m) {
  if (!is_smooth(ring)) {
    auto w = find_singular_witness(ring);
    std::string msg = "curve is singular";
    if (w) {
      msg += " at (";
      for (std::size_t i = 0; i < w->size(); ++i) msg += (i ? ":" : "") + to_string((*w)[i]);
      msg += ")";
    }
    throw SingularCurve(msg, w);
  }
  return ring.quotient_basis(m);
}

// Witness search is meaningful only for constant coefficients.
template <>
std::optional<std::vector<Rational>> find_singular_witness<Rational>(const JacobianRing<Rational>& ring, int bound);
template <>
std::optional<std::vector<Rational>> find_singular_witness<NFElem>(const JacobianRing<NFElem>& ring, int bound);
template <>
std::optional<std::vector<Rational>> find_singular_witness<RatFunQ>(const JacobianRing<RatFunQ>& ring, int bound);
template <>
std::optional<std::vector<Rational>> find_singular_witness<RatFunNF>(const JacobianRing<RatFunNF>& ring, int bound);

}  // namespace gdpf
