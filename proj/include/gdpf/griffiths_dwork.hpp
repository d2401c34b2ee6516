#pragma once

// Cohomology classes P*Omega0/F^k on the complement of a hypersurface in a
// one-parameter family, Gauss-Manin differentiation, pole reduction through
// the Jacobian ideal, and Picard-Fuchs equations.

#include "gdpf/fuchsian.hpp"
#include "gdpf/jacobian.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpf {

/// P*Omega0/F^k. The family F is held by the engine that created it.
template <class K>
struct CohomClass {
  MultiPoly<K> numerator;
  int pole = 1;
};

/// Coordinates of a class against the quotient bases of degrees k*d - n,
/// k = 1..n, concatenated in that order.
template <class K>
struct NormalForm {
  std::vector<K> coords;
  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.coords == b.coords; }
  bool is_zero() const {
    for (const auto& c : coords)
      if (!gdpf::is_zero(c)) return false;
    return true;
  }
};

/// One pole-reduction step: the certificate's target (numerator minus its
/// basis part) at pole order `pole` was rewritten at pole order pole-1.
template <class K>
struct ReductionStep {
  int pole = 0;
  CofactorCertificate<K> certificate;
};

class NotInJacobian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class K>
struct PicardFuchsResult {
  int order = 0;
  /// Monic ODE y^(r) + a_{r-1} y^(r-1) + ... + a_0 y = 0; holds a_0..a_{r-1}.
  std::vector<K> coefficients;
  /// rank of {omega, D omega, ..., D^i omega} for i = 0..order.
  std::vector<std::size_t> rank_profile;
  std::vector<NormalForm<K>> normal_forms;
  std::vector<ReductionStep<K>> certificates;

  bool verify_certificates() const {
    for (const auto& c : certificates)
      if (!c.certificate.verify()) return false;
    return true;
  }
};

class NoRelationFound : public std::runtime_error {
 public:
  NoRelationFound(const std::string& what, std::vector<std::size_t> ranks)
      : std::runtime_error(what), ranks_(std::move(ranks)) {}
  const std::vector<std::size_t>& rank_profile() const { return ranks_; }

 private:
  std::vector<std::size_t> ranks_;
};

template <class K>
class GriffithsDwork {
 public:
  explicit GriffithsDwork(MultiPoly<K> family)
      : ring_(std::make_shared<JacobianRing<K>>(family)), dfamily_(param_derivative(family)) {
    if (!is_smooth(*ring_)) throw SingularCurve("generic fiber of the family is singular", std::nullopt);
    n_ = static_cast<int>(family.arity());
    d_ = family.degree();
    for (int k = 1; k <= n_ - 1; ++k) bases_.push_back(ring_->quotient_basis(k * d_ - n_));
  }

  const MultiPoly<K>& family() const { return ring_->curve(); }
  const JacobianRing<K>& ring() const { return *ring_; }
  /// Quotient bases for pole orders 1..n-1.
  const std::vector<GradedQuotientBasis>& bases() const { return bases_; }
  int numerator_degree(int pole) const { return pole * d_ - n_; }

  CohomClass<K> make_class(MultiPoly<K> p, int pole) const {
    CohomClass<K> c{std::move(p), pole};
    check(c);
    return c;
  }

  /// Basis class number i of the normal-form coordinates.
  CohomClass<K> basis_class(std::size_t i) const {
    for (std::size_t k = 0; k < bases_.size(); ++k) {
      if (i < bases_[k].size())
        return make_class(MultiPoly<K>::monomial(K(1), bases_[k].monomials[i], family().vars()), static_cast<int>(k) + 1);
      i -= bases_[k].size();
    }
    throw std::out_of_range("basis_class index");
  }
  std::size_t dimension() const {
    std::size_t s = 0;
    for (const auto& b : bases_) s += b.size();
    return s;
  }

  CohomClass<K> gauss_manin_derivative(const CohomClass<K>& w) const {
    check(w);
    MultiPoly<K> num = w.numerator * dfamily_ * K(-w.pole) + family() * param_derivative(w.numerator);
    return make_class(std::move(num), w.pole + 1);
  }

  /// Rewrites a class whose numerator lies in J(F) with one pole less.
  CohomClass<K> reduce_pole_order(const CohomClass<K>& w, std::vector<ReductionStep<K>>* log = nullptr) const {
    check(w);
    if (w.pole < 2) throw std::invalid_argument("reduce_pole_order needs pole order at least 2");
    if (w.numerator.is_zero()) return make_class(MultiPoly<K>(family().vars()), w.pole - 1);
    auto m = graded_membership(w.numerator, *ring_);
    if (!m.member) throw NotInJacobian("numerator is not in the Jacobian ideal; residue " + m.residue.to_string());
    const auto& cert = *m.certificate;
    if (log) log->push_back({w.pole, cert});
    return make_class(divergence(cert) * (K(1) / K(w.pole - 1)), w.pole - 1);
  }

  NormalForm<K> normal_form(const CohomClass<K>& w, std::vector<ReductionStep<K>>* log = nullptr) const {
    check(w);
    NormalForm<K> nf;
    nf.coords.assign(dimension(), K(0));
    CohomClass<K> cur = w;
    while (true) {
      const int k = cur.pole;
      if (cur.numerator.is_zero()) break;
      auto red = ring_->reduce(cur.numerator, numerator_degree(k));
      if (k <= static_cast<int>(bases_.size())) {
        const std::size_t off = offset(k);
        for (std::size_t i = 0; i < red.coords.size(); ++i) nf.coords[off + i] += red.coords[i];
      } else {
        for (const auto& c : red.coords)
          if (!gdpf::is_zero(c)) throw std::logic_error("nonzero quotient above the Hodge range");
      }
      if (k == 1) {
        if (!red.certificate.target.is_zero()) throw std::logic_error("ideal part at pole order one");
        break;
      }
      if (log) log->push_back({k, red.certificate});
      cur = make_class(divergence(red.certificate) * (K(1) / K(k - 1)), k - 1);
    }
    return nf;
  }

  /// The class represented by normal-form coordinates.
  std::vector<std::pair<K, CohomClass<K>>> expand(const NormalForm<K>& nf) const {
    std::vector<std::pair<K, CohomClass<K>>> out;
    for (std::size_t i = 0; i < nf.coords.size(); ++i)
      if (!gdpf::is_zero(nf.coords[i])) out.emplace_back(nf.coords[i], basis_class(i));
    return out;
  }

  /// Normal form of D(class with normal form nf): differentiate the basis
  /// representation, then reduce.
  NormalForm<K> derivative_of_normal_form(const NormalForm<K>& nf, std::vector<ReductionStep<K>>* log = nullptr) const {
    NormalForm<K> out;
    out.coords.assign(dimension(), K(0));
    for (std::size_t i = 0; i < nf.coords.size(); ++i) {
      if (gdpf::is_zero(nf.coords[i])) continue;
      out.coords[i] += param_derivative(nf.coords[i]);
      const NormalForm<K> d = basis_derivative(i, log);
      for (std::size_t j = 0; j < d.coords.size(); ++j) out.coords[j] += nf.coords[i] * d.coords[j];
    }
    return out;
  }

  /// Minimal-order relation among omega, D omega, ..., D^r omega.
  PicardFuchsResult<K> picard_fuchs(const CohomClass<K>& omega, int max_order = -1) const {
    if (max_order < 0) max_order = static_cast<int>(dimension());
    PicardFuchsResult<K> res;
    NormalForm<K> cur = normal_form(omega, &res.certificates);
    std::vector<SparseVec<K>> gens;
    for (int r = 0; r <= max_order; ++r) {
      res.normal_forms.push_back(cur);
      SparseVec<K> v = to_sparse(cur);
      TrackedEchelon<K> ech(static_cast<int>(dimension()), gens);
      auto red = ech.reduce(v);
      if (red.remainder.empty()) {
        res.rank_profile.push_back(ech.rank());
        res.order = r;
        res.coefficients.assign(static_cast<std::size_t>(r), K(0));
        for (const auto& [g, val] : red.combo.e) res.coefficients[static_cast<std::size_t>(g)] = -val;
        return res;
      }
      gens.push_back(std::move(v));
      res.rank_profile.push_back(ech.rank() + 1);
      if (r == max_order) break;
      cur = derivative_of_normal_form(cur, &res.certificates);
    }
    throw NoRelationFound("no relation up to order " + std::to_string(max_order), res.rank_profile);
  }

  /// Sum_i dG_i/dx_i.
  static MultiPoly<K> divergence(const CofactorCertificate<K>& c) {
    MultiPoly<K> r(c.curve.vars());
    for (std::size_t i = 0; i < c.cofactors.size(); ++i) r += c.cofactors[i].partial_derivative(i);
    return r;
  }

 private:
  void check(const CohomClass<K>& w) const {
    if (w.pole < 1) throw std::logic_error("pole order must be positive");
    if (!w.numerator.is_zero() && (!w.numerator.is_homogeneous() || w.numerator.degree() != numerator_degree(w.pole)))
      throw std::logic_error("degree bookkeeping violated: numerator degree " + std::to_string(w.numerator.degree()) +
                             " at pole order " + std::to_string(w.pole));
  }

  std::size_t offset(int k) const {
    std::size_t o = 0;
    for (int j = 1; j < k; ++j) o += bases_[static_cast<std::size_t>(j - 1)].size();
    return o;
  }

  SparseVec<K> to_sparse(const NormalForm<K>& nf) const {
    SparseVec<K> v;
    for (std::size_t i = 0; i < nf.coords.size(); ++i)
      if (!gdpf::is_zero(nf.coords[i])) v.e.emplace_back(static_cast<int>(i), nf.coords[i]);
    return v;
  }

  const NormalForm<K>& basis_derivative(std::size_t i, std::vector<ReductionStep<K>>* log) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    if (basis_derivs_.size() != dimension()) {
      basis_derivs_.assign(dimension(), std::nullopt);
      basis_steps_.assign(dimension(), {});
    }
    auto& slot = basis_derivs_[i];
    if (!slot) slot = normal_form(gauss_manin_derivative(basis_class(i)), &basis_steps_[i]);
    if (log) log->insert(log->end(), basis_steps_[i].begin(), basis_steps_[i].end());
    return *slot;
  }

  std::shared_ptr<JacobianRing<K>> ring_;
  MultiPoly<K> dfamily_;
  int n_ = 0;
  int d_ = 0;
  std::vector<GradedQuotientBasis> bases_;
  mutable std::vector<std::optional<NormalForm<K>>> basis_derivs_;
  mutable std::vector<std::vector<ReductionStep<K>>> basis_steps_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
};

/// The Picard-Fuchs relation as a monic ODE in the family parameter.
template <class C>
LinearODE<C> to_ode(const PicardFuchsResult<RationalFunction<C>>& r, const std::string& var = "s") {
  LinearODE<C> L;
  L.a = r.coefficients;
  L.var = var;
  return L;
}

}  // namespace gdpf
