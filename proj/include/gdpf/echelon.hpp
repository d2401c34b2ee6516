#pragma once

// Sparse row echelon forms over an exact field, with each row remembering
// the combination of input generators that produced it.

#include "gdpf/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gdpf {

/// Sparse vector as (index, value) pairs sorted by index, no zeros stored.
template <class K>
struct SparseVec {
  std::vector<std::pair<int, K>> e;

  bool empty() const { return e.empty(); }
  int lead() const { return e.front().first; }
  const K& lead_value() const { return e.front().second; }
  K at(int i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
    return (it != e.end() && it->first == i) ? it->second : K(0);
  }

  /// this -= f * w
  void axpy(const K& f, const SparseVec& w) {
    if (is_zero(f) || w.e.empty()) return;
    std::vector<std::pair<int, K>> out;
    out.reserve(e.size() + w.e.size());
    auto a = e.begin();
    auto b = w.e.begin();
    while (a != e.end() || b != w.e.end()) {
      if (b == w.e.end() || (a != e.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == e.end() || b->first < a->first) {
        out.emplace_back(b->first, -(f * b->second));
        ++b;
      } else {
        K v = a->second - f * b->second;
        if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    e = std::move(out);
  }

  void scale(const K& f) {
    for (auto& p : e) p.second *= f;
  }

  std::size_t cost() const {
    std::size_t c = 0;
    for (const auto& p : e) c += pivot_cost(p.second);
    return c;
  }
};

/// How awkward a value is as a pivot; units that divide cheaply score 0.
inline std::size_t pivot_complexity(const Rational&) { return 0; }

template <class K>
std::size_t pivot_complexity(const K& x) {
  if constexpr (requires { x.num(); x.den(); }) {
    // Rational functions: monomials over monomials are cheapest.
    const auto& n = x.num();
    const auto& d = x.den();
    return static_cast<std::size_t>((n.degree() - n.valuation()) + (d.degree() - d.valuation()));
  } else {
    return 0;
  }
}

/// Echelon basis of the span of generator vectors. Pivot columns are the
/// leftmost nonzero columns, so the pivot set depends only on the span and
/// the column order.
template <class K>
class TrackedEchelon {
 public:
  struct Row {
    SparseVec<K> vec;    // normalized: leading value 1
    SparseVec<K> combo;  // vec = sum combo[g] * generator[g]
  };

  TrackedEchelon() = default;

  /// Builds the echelon form of `gens` (each over columns [0, ncols)).
  TrackedEchelon(int ncols, const std::vector<SparseVec<K>>& gens) : ncols_(ncols), pivot_(ncols) {
    std::vector<std::vector<Row>> bucket(static_cast<std::size_t>(ncols));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].empty()) continue;
      Row r{gens[g], SparseVec<K>{}};
      r.combo.e.emplace_back(static_cast<int>(g), K(1));
      bucket[static_cast<std::size_t>(r.vec.lead())].push_back(std::move(r));
    }
    for (int c = 0; c < ncols; ++c) {
      auto& b = bucket[static_cast<std::size_t>(c)];
      if (b.empty()) continue;
      std::size_t best = 0;
      std::size_t best_cost = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t cost = pivot_complexity(b[i].vec.lead_value()) * (1u << 20) +
                                 b[i].vec.e.size() * 1024 + b[i].vec.cost() + b[i].combo.e.size();
        if (i == 0 || cost < best_cost) {
          best = i;
          best_cost = cost;
        }
      }
      Row piv = std::move(b[best]);
      const K inv = K(1) / piv.vec.lead_value();
      piv.vec.scale(inv);
      piv.combo.scale(inv);
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i == best) continue;
        Row r = std::move(b[i]);
        const K f = r.vec.lead_value();
        r.vec.axpy(f, piv.vec);
        r.combo.axpy(f, piv.combo);
        if (!r.vec.empty()) bucket[static_cast<std::size_t>(r.vec.lead())].push_back(std::move(r));
      }
      b.clear();
      b.shrink_to_fit();
      pivot_[static_cast<std::size_t>(c)] = rows_.size();
      rows_.push_back(std::move(piv));
    }
  }

  int columns() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int c) const { return pivot_[static_cast<std::size_t>(c)].has_value(); }
  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

  struct Reduction {
    SparseVec<K> remainder;  // supported on free columns
    SparseVec<K> combo;      // v - remainder = sum combo[g] * generator[g]
  };

  Reduction reduce(SparseVec<K> v) const {
    Reduction out;
    while (!v.empty()) {
      const int c = v.lead();
      const auto& p = pivot_[static_cast<std::size_t>(c)];
      if (!p) {
        out.remainder.e.push_back(std::move(v.e.front()));
        v.e.erase(v.e.begin());
        continue;
      }
      const Row& r = rows_[*p];
      const K f = v.lead_value();
      v.axpy(f, r.vec);
      out.combo.axpy(-f, r.combo);
    }
    return out;
  }

 private:
  int ncols_ = 0;
  std::vector<std::optional<std::size_t>> pivot_;
  std::vector<Row> rows_;
};

}  // namespace gdpf
