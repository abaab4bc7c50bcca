#include "dehn/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dehn/error.hpp"

namespace dehn {

namespace {

// +-t^m with m >= 0 in both numerator and denominator.
bool is_signed_monomial(const Polynomial& p) {
  if (p.is_zero()) return false;
  return p.strip_t_power().is_constant() && abs(p.leading()) == 1;
}

}  // namespace

Propagator build_propagator(const ChainComplex& cx, std::optional<std::uint64_t> pivot_seed) {
  ExactnessReport ex = check_exactness(cx);
  if (!ex.exact) throw Error(ErrorKind::NotExact, "complex is not exact: " + ex.witness);

  std::vector<std::size_t> order(cx.c1_dim);
  std::iota(order.begin(), order.end(), 0);
  if (pivot_seed) {
    std::mt19937_64 rng(*pivot_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  // Pivots of [d2 | e_order[0] e_order[1] ...] past the first c2 columns
  // extend a basis of image(d2) to all of C1.
  FieldMatrix candidates(cx.c1_dim, cx.c1_dim);
  for (std::size_t j = 0; j < order.size(); ++j) candidates(order[j], j) = 1;
  RrefResult rr = matrix_rref(FieldMatrix::hconcat(cx.d2, candidates));
  Propagator g;
  for (std::size_t col : rr.pivot_columns)
    if (col >= cx.c2_dim) g.complement.push_back(order[col - cx.c2_dim]);

  const std::size_t s = g.complement.size();
  FieldMatrix embed(cx.c1_dim, s);
  for (std::size_t j = 0; j < s; ++j) embed(g.complement[j], j) = 1;

  FieldMatrix basis = FieldMatrix::hconcat(embed, cx.d2);
  FieldMatrix inv = matrix_inverse(basis);
  g.g2 = inv.block(s, 0, cx.c2_dim, cx.c1_dim);
  g.g1 = embed * matrix_inverse(cx.d1 * embed);

  if (!verify_propagator(cx, g))
    throw Error(ErrorKind::NotExact, "propagator identities fail; complex is not a chain complex");
  return g;
}

bool verify_propagator(const ChainComplex& cx, const Propagator& g) {
  if (!(g.g2 * cx.d2 == FieldMatrix::identity(cx.c2_dim))) return false;
  if (!(cx.d2 * g.g2 + g.g1 * cx.d1 == FieldMatrix::identity(cx.c1_dim))) return false;
  return cx.d1 * g.g1 == FieldMatrix::identity(cx.c0_dim);
}

TorsionValue normalize_torsion(const RatFunc& raw) {
  TorsionValue tv;
  tv.raw = raw;
  if (raw.is_zero()) return tv;
  Polynomial num = raw.num().strip_t_power();
  Polynomial den = raw.den().strip_t_power();
  tv.unit_exponent = raw.num().valuation() - raw.den().valuation();
  tv.normalized = RatFunc(num, den);
  // Canonical form makes den monic; fix the sign on the numerator.
  if (tv.normalized.num().constant_term() < 0) {
    tv.normalized = -tv.normalized;
    tv.unit_sign = -1;
  }
  return tv;
}

TorsionValue torsion(const ChainComplex& cx, const Propagator& g) {
  return normalize_torsion(matrix_det(FieldMatrix::hconcat(cx.d2, g.g1)));
}

bool equal_up_to_units(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  RatFunc q = a / b;
  return is_signed_monomial(q.num()) && is_signed_monomial(q.den());
}

bool torsion_equal_up_to_units(const TorsionValue& a, const TorsionValue& b) {
  return equal_up_to_units(a.raw, b.raw);
}

DefectValue defect(const DehnGraph& graph, const ChainComplex& cx, const Propagator& g, const Representation& rep) {
  if (rep.dim() != 1)
    throw Error(ErrorKind::UnsupportedRepresentation,
                "defect is only defined here for one-dimensional representations");
  DefectValue d;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const DehnEdge& e = graph.edges[i];
    if (e.label.word.empty()) continue;
    const int exponent = e.label.word.exponent_sum();
    if (exponent == 0) continue;
    const std::size_t p = static_cast<std::size_t>(cx.block_of(e.from));
    const std::size_t q = static_cast<std::size_t>(cx.block_of(e.to));
    const int index = graph.vertices[e.from].index;
    const RatFunc& prop = index == 2 ? g.g2(p, q) : g.g1(p, q);
    if (prop.is_zero()) continue;
    RatFunc term = RatFunc(index % 2 == 0 ? exponent : -exponent) * rep.eval(e.label)(0, 0) * prop;
    d.representative += term;
    d.terms.push_back({static_cast<int>(i), term});
  }
  return d;
}

bool defect_equal_mod_Z(const RatFunc& a, const RatFunc& b) { return (a - b).is_integer(); }

bool defect_equal_mod_Z(const DefectValue& a, const DefectValue& b) {
  return defect_equal_mod_Z(a.representative, b.representative);
}

bool check_lescop_relation(const TorsionValue& tor, const DefectValue& d) {
  if (tor.raw.is_zero()) return false;
  return defect_equal_mod_Z(d.representative, t_log_derivative(tor.raw));
}

}  // namespace dehn
