#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "spectau/curve.hpp"
#include "spectau/hyperelliptic.hpp"
#include "spectau/random.hpp"
#include "spectau/series.hpp"

namespace testing_util {

using namespace spectau;

inline Rational R(const char* s) { return parse_rational(s); }

inline Rational pow_helper(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// ascending coefficients
inline Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

inline RatMatrix M(int n, std::initializer_list<Rational> entries) {
  RatMatrix m(n, Rational(0));
  int k = 0;
  for (const auto& e : entries) {
    m(k / n, k % n) = e;
    ++k;
  }
  return m;
}

// Term-by-term square root of a monic even-degree polynomial as a series in
// 1/z: s(z) = z^(d/2) (1 + ...), solved coefficient by coefficient from
// s^2 = Q. Independent of the Newton iteration in the library.
inline std::vector<Rational> sqrt_series_coeffs(const Poly& q, int terms) {
  int d = q.degree();
  std::vector<Rational> qn(static_cast<std::size_t>(terms), Rational(0));
  for (int k = 0; k < terms && k <= d; ++k) qn[static_cast<std::size_t>(k)] = q.coeff(d - k);
  std::vector<Rational> s(static_cast<std::size_t>(terms), Rational(0));
  s[0] = 1;
  for (int k = 1; k < terms; ++k) {
    Rational acc = qn[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc / 2;
  }
  return s;
}

inline MatrixPolynomial g1_instance() { return hyperelliptic_matrix(P({0, 0, 1}), P({1, 1}), P({0, 2})); }

inline MatrixPolynomial g2_instance() {
  return hyperelliptic_matrix(P({R("2/3"), R("1/5"), R("-1/2"), 1}), P({1, R("-1/2"), R("3/2")}), P({R("1/3"), 1, -2}));
}

inline MatrixPolynomial three_by_three() {
  return MatrixPolynomial(3, 1, {M(3, {0, 0, 0, 0, 1, 0, 0, 0, 3}), M(3, {0, 2, 1, 5, 0, 4, -2, R("1/3"), 0})});
}

inline MatrixPolynomial diagonal_w(int n, int m) {
  std::vector<RatMatrix> b(static_cast<std::size_t>(m) + 1, RatMatrix(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    b[0](i, i) = i + 1;
    for (int k = 1; k <= m; ++k) b[static_cast<std::size_t>(k)](i, i) = make_rational(k - i, k + 1);
  }
  return MatrixPolynomial(n, m, b);
}

inline MatrixTailSeries identity_series(int n, long order) {
  std::vector<RatMatrix> c(static_cast<std::size_t>(order) + 1, RatMatrix(n, Rational(0)));
  c[0] = rat_identity(n);
  return MatrixTailSeries(n, 0, c);
}

inline bool is_zero_series(const MatrixTailSeries& s) {
  for (const auto& m : s.coeffs())
    for (const auto& x : m.data())
      if (!is_zero(x)) return false;
  return true;
}

}  // namespace testing_util
