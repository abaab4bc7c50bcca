#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dehn/dehngraph.hpp"
#include "dehn/mscomplex.hpp"
#include "dehn/ratfunc.hpp"
#include "dehn/representation.hpp"

namespace dehn {

// Chain contraction of an exact three-term complex:
//   g2 * d2 = 1,  d2 * g2 + g1 * d1 = 1,  d1 * g1 = 1.
struct Propagator {
  FieldMatrix g2;  // c2_dim x c1_dim
  FieldMatrix g1;  // c1_dim x c0_dim
  // Coordinates of C1 whose span complements image(d2).
  std::vector<std::size_t> complement;
};

// Picks the complement greedily from the C1 coordinate vectors, in ascending
// order or, with a seed, in a seeded random order; g1 inverts d1 on the
// complement and g2 inverts d2 after projecting along it. Throws
// Error(NotExact) if cx is not exact.
Propagator build_propagator(const ChainComplex& cx, std::optional<std::uint64_t> pivot_seed = std::nullopt);

bool verify_propagator(const ChainComplex& cx, const Propagator& g);

// raw = sign * t^exponent * normalized, where normalized has numerator and
// denominator with nonzero constant terms and a positive numerator constant.
struct TorsionValue {
  RatFunc raw;
  RatFunc normalized;
  int unit_exponent = 0;
  int unit_sign = 1;
};

TorsionValue normalize_torsion(const RatFunc& raw);
// det [d2 | g1].
TorsionValue torsion(const ChainComplex& cx, const Propagator& g);
// a.raw / b.raw = +-t^m.
bool torsion_equal_up_to_units(const TorsionValue& a, const TorsionValue& b);
bool equal_up_to_units(const RatFunc& a, const RatFunc& b);

struct DefectTerm {
  int edge = 0;  // index into DehnGraph::edges
  RatFunc value;
};

struct DefectValue {
  RatFunc representative;
  std::vector<DefectTerm> terms;  // nonzero contributions only
};

// Sum over Dehn-graph edges with a nonempty word w and label +-w of
//   (-1)^index(source) * e(w) * rho(+-w) * G(source, target)
// where e(w) is the exponent sum. Throws Error(UnsupportedRepresentation)
// for representations of dimension > 1.
DefectValue defect(const DehnGraph& graph, const ChainComplex& cx, const Propagator& g, const Representation& rep);

// Difference is an integer constant.
bool defect_equal_mod_Z(const DefectValue& a, const DefectValue& b);
bool defect_equal_mod_Z(const RatFunc& a, const RatFunc& b);

// d = t (d/dt) log Tor modulo Z.
bool check_lescop_relation(const TorsionValue& tor, const DefectValue& d);

}  // namespace dehn
