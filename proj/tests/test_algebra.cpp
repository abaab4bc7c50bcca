#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dehn/error.hpp"
#include "dehn/json_io.hpp"
#include "dehn/matrix.hpp"
#include "dehn/ratfunc.hpp"
#include "fixtures.hpp"

using namespace dehn;
using fixtures::frac;
using fixtures::poly;

namespace {

// Laplace expansion along the first row; independent of the elimination
// code it checks.
RatFunc cofactor_det(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  RatFunc acc;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    RatFunc term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  // t^2 - t + 1 = t (t - 1) + 1, so the Euclidean algorithm stops at 1.
  CHECK(poly_gcd(poly({1, -1, 1}), poly({-1, 1})) == poly({1}));
  CHECK(poly_gcd(Polynomial{}, poly({4, 2})) == poly({2, 1}).monic());
  CHECK(poly_gcd(Polynomial{}, Polynomial{}).is_zero());
}

TEST_CASE("poly_gcd divides both arguments") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial common = fixtures::random_poly(rng, 2);
    Polynomial a = common * fixtures::random_poly(rng, 3);
    Polynomial b = common * fixtures::random_poly(rng, 3);
    Polynomial g = poly_gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK(g.leading() == 1);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    if (!common.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("polynomial division by zero is an error") {
  CHECK_THROWS_AS(divmod(poly({1, 1}), Polynomial{}), Error);
}

TEST_CASE("ratfunc canonical form") {
  RatFunc f(poly({2, -2}), poly({-2, 0, 2}));  // (2 - 2t) / (2t^2 - 2) = -1/(t + 1)
  CHECK(f.num() == poly({-1}));
  CHECK(f.den() == poly({1, 1}));
  CHECK(RatFunc(Polynomial{}, poly({3, 5})).den() == poly({1}));
  CHECK_THROWS_AS(RatFunc(poly({1}), Polynomial{}), Error);
}

TEST_CASE("ratfunc_arith") {
  const RatFunc inv_one_minus_t = frac({1}, {1, -1});
  const RatFunc delta = RatFunc(poly({1, -1, 1}));
  RatFunc prod = ratfunc_arith(inv_one_minus_t, delta, ArithOp::Mul);
  CHECK(prod.den() == poly({-1, 1}));
  CHECK(prod.num() == poly({-1, 1, -1}));

  RatFunc a = frac({0, 5, 1}, {3, 0, 1});
  CHECK(ratfunc_arith(a, RatFunc{}, ArithOp::Add) == a);
  CHECK_THROWS_AS(ratfunc_arith(a, RatFunc{}, ArithOp::Div), Error);

  // (2t^2 - t)/(t^2 - t + 1) - t/(t - 1) over the common denominator
  // (t^2 - t + 1)(t - 1) = t^3 - 2t^2 + 2t - 1 has numerator
  // (2t^2 - t)(t - 1) - t(t^2 - t + 1) = t^3 - 2t^2.
  RatFunc diff = ratfunc_arith(frac({0, -1, 2}, {1, -1, 1}), frac({0, 1}, {-1, 1}), ArithOp::Sub);
  CHECK(diff == frac({0, 0, -2, 1}, {-1, 2, -2, 1}));
  for (const auto& x : fixtures::sample_points()) {
    Rational expected = (2 * x * x - x) / (x * x - x + 1) - x / (x - 1);
    Rational got;
    REQUIRE(fixtures::value_at(diff, x, got));
    CHECK(got == expected);
  }
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    RatFunc a = fixtures::random_ratfunc(rng);
    RatFunc b = fixtures::random_ratfunc(rng);
    RatFunc c = fixtures::random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Canonicalizing an already canonical value changes nothing.
    CHECK(RatFunc(a.num(), a.den()) == a);
  }
}

TEST_CASE("ratfunc_derivative") {
  CHECK(ratfunc_derivative(RatFunc(poly({0, 0, 1}))) == RatFunc(poly({0, 2})));
  // d/dt 1/(1 - t) = 1/(1 - t)^2
  CHECK(ratfunc_derivative(frac({1}, {1, -1})) == frac({1}, {1, -2, 1}));

  // t d/dt log((t^2 - t + 1)/(1 - t)) = t(2t - 1)/(t^2 - t + 1) + t/(1 - t)
  const RatFunc tor = frac({1, -1, 1}, {1, -1});
  const RatFunc expected = frac({0, -1, 2}, {1, -1, 1}) - frac({0, 1}, {-1, 1});
  CHECK(t_log_derivative(tor) == expected);
}

TEST_CASE("derivative agrees with a difference quotient identity") {
  // p'(x) is the quotient (p(t) - p(x)) / (t - x) evaluated at t = x.
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = fixtures::random_poly(rng, 5);
    for (const auto& x : fixtures::sample_points()) {
      Polynomial shifted = p - Polynomial(p.eval(x));
      auto [q, r] = divmod(shifted, Polynomial(std::vector<Rational>{-x, Rational(1)}));
      CHECK(r.is_zero());
      CHECK(q.eval(x) == p.derivative().eval(x));
    }
  }
}

TEST_CASE("matrix_rref") {
  auto id = FieldMatrix::identity(3);
  RrefResult r = matrix_rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);

  CHECK(matrix_rref(FieldMatrix(3, 4)).rank == 0);

  const RatFunc t = RatFunc::t();
  FieldMatrix d2(4, 3, {-t, -1, 0, 1, 1, 1, 0, -t, -1, -1, 0, -t});
  CHECK(matrix_rank(d2) == 3);
}

TEST_CASE("rank is transpose invariant") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> dim(1, 6);
    FieldMatrix m = fixtures::random_matrix(rng, dim(rng), dim(rng), 50);
    CHECK(matrix_rank(m) == matrix_rank(m.transpose()));
  }
  // Rank-deficient by construction: third row is the sum of the first two.
  FieldMatrix m(3, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    m(0, c) = fixtures::frac({static_cast<long>(c), 1}, {1});
    m(1, c) = fixtures::frac({1, static_cast<long>(c)}, {2, 1});
    m(2, c) = m(0, c) + m(1, c);
  }
  CHECK(matrix_rank(m) == 2);
  CHECK(matrix_rank(m.transpose()) == 2);
}

TEST_CASE("matrix_det") {
  const RatFunc t = RatFunc::t();
  const RatFunc g = frac({1}, {1, -1});
  FieldMatrix m(4, 4, {-t, -1, 0, g, 1, 1, 1, 0, 0, -t, -1, 0, -1, 0, -t, 0});
  // Expanding along the last column: -g * (t^2 - t + 1).
  CHECK(matrix_det(m) == frac({-1, 1, -1}, {1, -1}));
  CHECK(matrix_det(m) == cofactor_det(m));

  CHECK(matrix_det(FieldMatrix::identity(5)) == RatFunc(1));
  FieldMatrix rep(3, 3, {t, 1, 2, 0, t, 5, t, 1, 2});
  CHECK(matrix_det(rep).is_zero());
  CHECK_THROWS_AS(matrix_det(FieldMatrix(2, 3)), Error);
}

TEST_CASE("matrix_det agrees with cofactor expansion") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> dim(1, 3);
    int n = dim(rng);
    FieldMatrix m = fixtures::random_matrix(rng, n, n);
    CHECK(matrix_det(m) == cofactor_det(m));
  }
}

TEST_CASE("matrix_inverse") {
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    FieldMatrix m = fixtures::random_matrix(rng, 4, 4, 10);
    if (matrix_det(m).is_zero()) {
      CHECK_THROWS_AS(matrix_inverse(m), Error);
      continue;
    }
    CHECK(m * matrix_inverse(m) == FieldMatrix::identity(4));
  }
}

TEST_CASE("ratfunc json form") {
  RatFunc f = frac({0, -1}, {1});
  nlohmann::json j = ratfunc_to_json(f);
  CHECK(j["num"] == nlohmann::json::array({"0", "-1"}));
  CHECK(j["den"] == nlohmann::json::array({"1"}));
  CHECK(j["text"] == "-t");

  RatFunc g = RatFunc(Polynomial(std::vector<Rational>{Rational(1, 2), Rational(-3)}), poly({7, 0, 1}));
  CHECK(ratfunc_from_json(ratfunc_to_json(g)) == g);
  CHECK(ratfunc_to_json(g)["num"][0] == "1/2");
  CHECK(frac({1, -1, 1}, {-1, 1}).to_string() == "(t^2-t+1)/(t-1)");
}
