#pragma once

#include <random>
#include <string>
#include <vector>

#include "dehn/matrix.hpp"
#include "dehn/polynomial.hpp"
#include "dehn/ratfunc.hpp"

namespace fixtures {

// Left-handed trefoil.
inline const std::string kTrefoil = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
// Face of kTrefoil holding every +x corner; with it the region labels are
// t, t^2, t, t and the boundary matrices match the reference display.
inline constexpr int kTrefoilReferenceOuter = 3;
inline const std::string kTrefoilKinked = "[[1,4,2,5],[3,8,4,1],[5,2,6,3],[6,7,7,8]]";
inline const std::string kTrefoilKinkedOther = "[[1,4,2,5],[3,8,4,1],[5,2,6,3],[6,8,7,7]]";
inline const std::string kUnknotKink = "[[1,2,2,1]]";
inline const std::string kFigureEight = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
// kFigureEight with a curl inserted on edge 8.
inline const std::string kFigureEightKinked = "[[4,2,5,1],[10,6,1,5],[6,3,7,4],[2,7,3,8],[8,9,9,10]]";
inline const std::string kCinquefoil = "[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]";
inline const std::string kThreeTwist = "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]";
inline const std::string kStevedore = "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]";
inline const std::string kHopfLink = "[[4,1,3,2],[2,3,1,4]]";

struct CorpusKnot {
  std::string name;
  std::string pd;
  std::vector<long> alexander;  // classical table value, constant term first
};

inline const std::vector<CorpusKnot>& corpus() {
  static const std::vector<CorpusKnot> knots = {
      {"0_1 (one kink)", kUnknotKink, {1}},
      {"3_1", kTrefoil, {1, -1, 1}},
      {"4_1", kFigureEight, {1, -3, 1}},
      {"5_1", kCinquefoil, {1, -1, 1, -1, 1}},
      {"5_2", kThreeTwist, {2, -3, 2}},
      {"6_1", kStevedore, {2, -5, 2}},
  };
  return knots;
}

inline dehn::Polynomial poly(std::initializer_list<long> c) { return dehn::Polynomial::from_ints(c); }

inline dehn::Polynomial poly(const std::vector<long>& c) {
  std::vector<dehn::Rational> r(c.begin(), c.end());
  return dehn::Polynomial(std::move(r));
}

inline dehn::RatFunc frac(std::initializer_list<long> num, std::initializer_list<long> den) {
  return dehn::RatFunc(poly(num), poly(den));
}

// Value of f at a rational point, or false if f has a pole there.
inline bool value_at(const dehn::RatFunc& f, const dehn::Rational& x, dehn::Rational& out) {
  dehn::Rational d = f.den().eval(x);
  if (d == 0) return false;
  out = f.num().eval(x) / d;
  return true;
}

inline const std::vector<dehn::Rational>& sample_points() {
  static const std::vector<dehn::Rational> pts = {dehn::Rational(2), dehn::Rational(3), dehn::Rational(-5),
                                                  dehn::Rational(1, 7), dehn::Rational(-11, 3), dehn::Rational(13, 4)};
  return pts;
}

// Small random polynomial with integer coefficients in [-3, 3].
inline dehn::Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<dehn::Rational> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return dehn::Polynomial(std::move(c));
}

inline dehn::RatFunc random_ratfunc(std::mt19937& rng, int max_degree = 2) {
  dehn::Polynomial den;
  while (den.is_zero()) den = random_poly(rng, max_degree);
  return dehn::RatFunc(random_poly(rng, max_degree), den);
}

inline dehn::FieldMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_pct = 30) {
  dehn::FieldMatrix m(rows, cols);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) >= zero_pct) m(r, c) = random_ratfunc(rng, 1);
  return m;
}

}  // namespace fixtures
