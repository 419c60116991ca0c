#pragma once

#include <random>

#include "spectau/curve.hpp"

namespace spectau {

using Rng = std::mt19937_64;

// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4);

struct RandomWOptions {
  bool traceless = false;
  int max_num = 5;
  int max_den = 4;
};

// Leading coefficient diagonal with distinct integer entries.
MatrixPolynomial random_matrix_polynomial(Rng& rng, int n, int m, const RandomWOptions& options = {});

struct HyperellipticSample {
  Poly a, b, c;
};

// a monic of degree g+1, deg b, deg c <= g, with b and c of full degree.
// When squarefree is set, draws until a^2 + bc is squarefree.
HyperellipticSample random_hyperelliptic(Rng& rng, int g, bool squarefree = true, int max_num = 5, int max_den = 4);

}  // namespace spectau
