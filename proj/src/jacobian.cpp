#include "gdpf/jacobian.hpp"

namespace gdpf {

namespace {

template <class K>
std::optional<std::vector<Rational>> search(const JacobianRing<K>& ring, int bound) {
  const std::size_t n = ring.arity();
  std::vector<Rational> x(n);
  std::vector<int> idx(n, -bound);
  while (true) {
    // First nonzero coordinate normalized to 1 avoids repeats up to scale.
    bool ok = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (idx[i] != 0) {
        ok = idx[i] == 1;
        break;
      }
    }
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) x[i] = idx[i];
      std::vector<K> pt(x.begin(), x.end());
      bool all = true;
      for (const auto& p : ring.partials()) {
        if (!is_zero(p.eval(pt))) {
          all = false;
          break;
        }
      }
      if (all) return x;
    }
    std::size_t k = 0;
    while (k < n && idx[k] == bound) idx[k++] = -bound;
    if (k == n) break;
    ++idx[k];
  }
  return std::nullopt;
}

}  // namespace

template <>
std::optional<std::vector<Rational>> find_singular_witness<Rational>(const JacobianRing<Rational>& ring, int bound) {
  return search(ring, bound);
}
template <>
std::optional<std::vector<Rational>> find_singular_witness<NFElem>(const JacobianRing<NFElem>& ring, int bound) {
  return search(ring, bound);
}
template <>
std::optional<std::vector<Rational>> find_singular_witness<RatFunQ>(const JacobianRing<RatFunQ>&, int) {
  return std::nullopt;
}
template <>
std::optional<std::vector<Rational>> find_singular_witness<RatFunNF>(const JacobianRing<RatFunNF>&, int) {
  return std::nullopt;
}

}  // namespace gdpf
