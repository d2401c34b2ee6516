#include "gdpf/multipoly.hpp"

#include <numeric>

namespace gdpf {

const VarNames& xyz_names() {
  static const VarNames names = make_var_names({"X", "Y", "Z"});
  return names;
}

VarNames make_var_names(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<Monomial> monomials_of_degree(int n_vars, int m) {
  std::vector<Monomial> out;
  if (m < 0 || n_vars <= 0) return out;
  Monomial e(static_cast<std::size_t>(n_vars), 0);
  // Lex-descending enumeration of compositions of m.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == e.size()) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, m);
  return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

PolyNFs lift_parametric(const PolyQs& p, const FieldHandle& field) {
  auto lift_poly = [&](const UPoly<Rational>& u) {
    std::vector<NFElem> c;
    for (const auto& x : u.coeffs()) c.push_back(lift(NFElem(x), field));
    return UPoly<NFElem>(std::move(c));
  };
  return p.map_coefficients<RatFunNF>(
      [&](const RatFunQ& c) { return RatFunNF(lift_poly(c.num()), lift_poly(c.den())); });
}

}  // namespace gdpf
