#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dehn {

// Exact rationals. GMP keeps mpq_class in lowest terms with a positive
// denominator as long as every value goes through canonicalize().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Dense univariate polynomial over Q, constant term first. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(Rational c);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(Rational c, int degree);
  static Polynomial t() { return monomial(1, 1); }
  static Polynomial from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  // Divides by t^valuation().
  Polynomial strip_t_power() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form in the variable t, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws Error(DivisionByZero) if b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Division that must leave no remainder (std::logic_error otherwise).
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace dehn
