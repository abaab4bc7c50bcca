#pragma once

#include <optional>
#include <string>

#include "dehn/polynomial.hpp"

namespace dehn {

// Element of Q(t) held as num/den with den monic and gcd(num, den) = 1.
// Zero is 0/1, so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  // Throws Error(DivisionByZero) if den is zero.
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc t() { return RatFunc(Polynomial::t()); }
  // t^n for any integer n.
  static RatFunc t_pow(int n);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant function, nullopt otherwise.
  std::optional<Rational> constant_value() const;
  // Rational constant with denominator 1.
  bool is_integer() const;

  RatFunc inverse() const;
  RatFunc derivative() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(-t^2+t-1)/(t-1)"; the parentheses are dropped around single terms and
  // the denominator is omitted when it is 1.
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);
RatFunc ratfunc_derivative(const RatFunc& f);
// t * f'/f, the logarithmic derivative scaled by t.
RatFunc t_log_derivative(const RatFunc& f);

}  // namespace dehn
