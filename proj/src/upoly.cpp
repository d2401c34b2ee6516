#include "gdpf/upoly.hpp"

#include <cstdint>

namespace gdpf {

namespace {

// Rational roots of a square-free polynomial with rational coefficients.
std::vector<Rational> roots_of_squarefree(const UPoly<Rational>& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  BigInt lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> z;
  for (const auto& c : p.coeffs()) z.push_back(BigInt(c * lcm));
  UPoly<Rational> rest = p;
  if (z.front() == 0) {
    out.push_back(Rational(0));
    rest = exact_div(rest, UPoly<Rational>::x());
    z.erase(z.begin());
  }
  if (rest.degree() < 1) return out;
  auto ps = positive_divisors(z.front());
  auto qs = positive_divisors(z.back());
  if (!ps || !qs) throw std::domain_error("rational_roots: coefficients too hard to factor");
  for (const auto& a : *ps) {
    for (const auto& b : *qs) {
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        if (r.get_den() != b) continue;
        if (is_zero(rest.eval(r))) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

constexpr std::uint64_t kPrime = 4294967291ULL;  // largest prime below 2^32

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_int(const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

// Image modulo kPrime; false when a denominator vanishes there.
bool image_mod_p(const UPoly<Rational>& a, std::vector<std::uint64_t>& out) {
  out.clear();
  for (const auto& c : a.coeffs()) {
    const std::uint64_t n = reduce_int(c.get_num());
    if (c.get_den() == 1) {
      out.push_back(n);
      continue;
    }
    const std::uint64_t d = reduce_int(c.get_den());
    if (d == 0) return false;
    out.push_back(mulmod(n, powmod(d, kPrime - 2)));
  }
  return true;
}

void trim_mod(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

bool certainly_coprime(const UPoly<Rational>& a, const UPoly<Rational>& b) {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> y;
  if (!image_mod_p(a, x) || !image_mod_p(b, y)) return false;
  trim_mod(x);
  trim_mod(y);
  if (static_cast<int>(x.size()) != a.degree() + 1 || static_cast<int>(y.size()) != b.degree() + 1) return false;
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    const std::uint64_t inv = powmod(y.back(), kPrime - 2);
    while (x.size() >= y.size()) {
      const std::uint64_t f = mulmod(x.back(), inv);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j)
        x[shift + j] = (x[shift + j] + kPrime - mulmod(f, y[j])) % kPrime;
      trim_mod(x);
      if (x.empty()) return false;
    }
    std::swap(x, y);
  }
  return !y.empty();
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly<Rational>& p) {
  std::vector<std::pair<Rational, int>> out;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& r : roots_of_squarefree(parts[i])) out.emplace_back(r, static_cast<int>(i) + 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gdpf
