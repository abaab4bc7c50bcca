#include "dehn/ratfunc.hpp"

#include "dehn/error.hpp"

namespace dehn {

namespace {

bool single_term(const Polynomial& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

}  // namespace

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::t_pow(int n) {
  if (n >= 0) return RatFunc(Polynomial::monomial(1, n));
  return RatFunc(Polynomial(1), Polynomial::monomial(1, -n));
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Polynomial scale(Rational(1) / lc);
    num_ *= scale;
    den_ *= scale;
  }
}

std::optional<Rational> RatFunc::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term() / den_.constant_term();
}

bool RatFunc::is_integer() const {
  auto v = constant_value();
  return v && v->get_den() == 1;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n'd - nd')/d^2
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  std::string n = num_.to_string();
  if (den_ == Polynomial(1)) return n;
  if (!single_term(num_)) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!single_term(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

RatFunc ratfunc_derivative(const RatFunc& f) { return f.derivative(); }

RatFunc t_log_derivative(const RatFunc& f) { return RatFunc::t() * f.derivative() / f; }

}  // namespace dehn
