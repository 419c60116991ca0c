#include "spectau/random.hpp"

#include <algorithm>
#include <set>

#include "spectau/hyperelliptic.hpp"

namespace spectau {

Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

MatrixPolynomial random_matrix_polynomial(Rng& rng, int n, int m, const RandomWOptions& options) {
  std::uniform_int_distribution<long> eig(-3 * n, 3 * n);
  std::vector<RatMatrix> B(static_cast<std::size_t>(m) + 1, RatMatrix(n, Rational(0)));
  while (true) {
    std::set<long> seen;
    long sum = 0;
    for (int i = 0; i < n; ++i) {
      long v = eig(rng);
      if (options.traceless && i == n - 1) v = -sum;
      sum += v;
      seen.insert(v);
      B[0](i, i) = v;
    }
    if (static_cast<int>(seen.size()) == n) break;
  }
  for (int k = 1; k <= m; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B[static_cast<std::size_t>(k)](i, j) = random_rational(rng, options.max_num, options.max_den);
    if (options.traceless) {
      Rational t = 0;
      for (int i = 0; i + 1 < n; ++i) t += B[static_cast<std::size_t>(k)](i, i);
      B[static_cast<std::size_t>(k)](n - 1, n - 1) = -t;
    }
  }
  return MatrixPolynomial(n, m, std::move(B));
}

HyperellipticSample random_hyperelliptic(Rng& rng, int g, bool squarefree, int max_num, int max_den) {
  auto nonzero = [&] {
    Rational r;
    do r = random_rational(rng, max_num, max_den);
    while (is_zero(r));
    return r;
  };
  while (true) {
    std::vector<Rational> a(static_cast<std::size_t>(g) + 2), b(static_cast<std::size_t>(g) + 1), c(static_cast<std::size_t>(g) + 1);
    for (int i = 0; i <= g; ++i) {
      a[static_cast<std::size_t>(i)] = random_rational(rng, max_num, max_den);
      b[static_cast<std::size_t>(i)] = random_rational(rng, max_num, max_den);
      c[static_cast<std::size_t>(i)] = random_rational(rng, max_num, max_den);
    }
    a[static_cast<std::size_t>(g) + 1] = 1;
    b[static_cast<std::size_t>(g)] = nonzero();
    c[static_cast<std::size_t>(g)] = nonzero();
    HyperellipticSample s{Poly(a), Poly(b), Poly(c)};
    if (!squarefree || is_squarefree(hyperelliptic_q(s.a, s.b, s.c))) return s;
  }
}

}  // namespace spectau
