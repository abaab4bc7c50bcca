#include "dehn/oracle.hpp"

#include <map>

#include "dehn/error.hpp"

namespace dehn {

namespace {

using Laurent = std::map<int, long>;  // exponent -> coefficient

// Abelianized Fox derivative of a relator with respect to generator g.
Laurent fox_derivative(const Word& w, int g) {
  Laurent out;
  int prefix = 0;
  for (const auto& l : w.letters()) {
    if (l.generator == g) {
      if (l.exponent > 0)
        out[prefix] += 1;
      else
        out[prefix - 1] -= 1;
    }
    prefix += l.exponent;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Fraction-free elimination; every intermediate division is exact.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Polynomial minor_without_row(const std::vector<std::vector<Laurent>>& fox, std::size_t skip_row) {
  std::vector<std::vector<Polynomial>> m;
  for (std::size_t r = 0; r < fox.size(); ++r) {
    if (r == skip_row) continue;
    // Columns 1.. only; shift the row so its lowest exponent is 0.
    int low = 0;
    bool any = false;
    for (std::size_t c = 1; c < fox[r].size(); ++c)
      for (const auto& [e, v] : fox[r][c]) {
        low = any ? std::min(low, e) : e;
        any = true;
      }
    std::vector<Polynomial> row;
    for (std::size_t c = 1; c < fox[r].size(); ++c) {
      Polynomial p;
      for (const auto& [e, v] : fox[r][c]) p += Polynomial::monomial(Rational(v), e - low);
      row.push_back(std::move(p));
    }
    m.push_back(std::move(row));
  }
  return bareiss_det(std::move(m));
}

}  // namespace

AlexanderPolynomial fox_alexander(const WirtingerPresentation& w) {
  const int k = w.generator_count;
  if (k < 1) throw Error(ErrorKind::DegeneratePresentation, "presentation has no generators");
  std::vector<std::vector<Laurent>> fox(w.relators.size(), std::vector<Laurent>(k));
  for (std::size_t r = 0; r < w.relators.size(); ++r)
    for (int g = 0; g < k; ++g) fox[r][g] = fox_derivative(w.relators[r], g);

  Polynomial delta = minor_without_row(fox, 0);
  if (delta.is_zero()) {
    // Wirtinger presentations never get here; take the gcd of all maximal
    // minors as the fallback.
    for (std::size_t r = 1; r < fox.size(); ++r) delta = poly_gcd(delta, minor_without_row(fox, r));
    // poly_gcd is monic; rescale to a primitive integer polynomial.
    mpz_class den = 1;
    for (const auto& c : delta.coeffs()) den = lcm(den, mpz_class(c.get_den()));
    delta *= Polynomial(Rational(den));
    mpz_class content = 0;
    for (const auto& c : delta.coeffs()) content = gcd(content, mpz_class(c.get_num()));
    if (content != 0) delta *= Polynomial(Rational(1, 1) / Rational(content));
  }
  if (delta.is_zero()) throw Error(ErrorKind::DegeneratePresentation, "all maximal Fox minors vanish");
  delta = delta.strip_t_power();
  if (delta.leading() < 0) delta = -delta;
  return {delta};
}

bool milnor_check(const TorsionValue& tor, const AlexanderPolynomial& alex) {
  return equal_up_to_units(tor.normalized * RatFunc(Polynomial::from_ints({-1, 1})), RatFunc(alex.poly));
}

}  // namespace dehn
