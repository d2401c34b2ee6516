#include "gdpf/fuchsian.hpp"

namespace gdpf {

namespace {

UPoly<NFElem> lift_poly(const UPoly<Rational>& p) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return UPoly<NFElem>(std::move(c));
}

}  // namespace

LinearODE<NFElem> lift_ode(const LinearODE<Rational>& L) {
  LinearODE<NFElem> out;
  out.var = L.var;
  for (const auto& f : L.a) out.a.emplace_back(lift_poly(f.num()), lift_poly(f.den()));
  return out;
}

}  // namespace gdpf
