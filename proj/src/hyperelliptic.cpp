#include "spectau/hyperelliptic.hpp"

namespace spectau {

MatrixPolynomial hyperelliptic_matrix(const Poly& a, const Poly& b, const Poly& c) {
  int m = a.degree();
  if (m < 1 || a.leading() != 1) throw InputError("a(z) must be monic of degree g+1 >= 1");
  if (b.degree() >= m || c.degree() >= m) throw InputError("b(z) and c(z) must have degree at most g");
  std::vector<RatMatrix> coeffs;
  for (int k = 0; k <= m; ++k) {
    RatMatrix mat(2, Rational(0));
    mat(0, 0) = a.coeff(m - k);
    mat(0, 1) = b.coeff(m - k);
    mat(1, 0) = c.coeff(m - k);
    mat(1, 1) = -a.coeff(m - k);
    coeffs.push_back(mat);
  }
  return MatrixPolynomial(2, m, std::move(coeffs));
}

Poly hyperelliptic_q(const Poly& a, const Poly& b, const Poly& c) { return a * a + b * c; }

Rational difference_correlator(const CorrelatorTable& full, const IndexTuple& k) {
  int N = static_cast<int>(k.size());
  Rational total = 0;
  for (int mask = 0; mask < (1 << N); ++mask) {
    IndexTuple a(static_cast<std::size_t>(N));
    int sign = 1;
    for (int i = 0; i < N; ++i) {
      a[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      if (a[static_cast<std::size_t>(i)]) sign = -sign;
    }
    const Rational& f = full.at(a, k);
    if (sign > 0)
      total += f;
    else
      total -= f;
  }
  return total;
}

}  // namespace spectau
