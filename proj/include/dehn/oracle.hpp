#pragma once

#include "dehn/diagram.hpp"
#include "dehn/invariants.hpp"
#include "dehn/polynomial.hpp"

namespace dehn {

// Normalized: nonzero constant term, positive leading coefficient.
struct AlexanderPolynomial {
  Polynomial poly;
};

// Alexander polynomial from Fox derivatives of the Wirtinger relators, every
// generator sent to t. Works over Laurent polynomials with a fraction-free
// determinant, so it shares no code with the Dehn-graph pipeline beyond
// polynomial arithmetic. Throws Error(DegeneratePresentation) when there
// are no generators.
AlexanderPolynomial fox_alexander(const WirtingerPresentation& w);

// tor.normalized * (t - 1) equals alex.poly up to +-t^m.
bool milnor_check(const TorsionValue& tor, const AlexanderPolynomial& alex);

}  // namespace dehn
