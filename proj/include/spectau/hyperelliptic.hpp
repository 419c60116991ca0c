#pragma once

#include "spectau/correlators.hpp"
#include "spectau/curve.hpp"

namespace spectau {

// W = [[a, b], [c, -a]] with a monic of degree g+1 and deg b, deg c <= g.
MatrixPolynomial hyperelliptic_matrix(const Poly& a, const Poly& b, const Poly& c);

// Q = a^2 + b c = -det W, so the curve is w^2 = Q(z).
Poly hyperelliptic_q(const Poly& a, const Poly& b, const Poly& c);

// Sheet 0 is P+ (w ~ +z^(g+1)), sheet 1 is P-.
// F_{k1..kN} = sum over sheet tuples of (prod of +1 for P+, -1 for P-) F^{a1..aN}_{k1..kN}.
Rational difference_correlator(const CorrelatorTable& full, const IndexTuple& k);

}  // namespace spectau
