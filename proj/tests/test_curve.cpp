#include <doctest.h>

#include "helpers.hpp"
#include "spectau/projectors.hpp"

using namespace testing_util;

namespace {

MatrixPolynomial two_by_two(const Poly& a, const Poly& b, const Poly& c, const Poly& d, int m) {
  std::vector<RatMatrix> B(static_cast<std::size_t>(m) + 1, RatMatrix(2, Rational(0)));
  for (int k = 0; k <= m; ++k) {
    B[static_cast<std::size_t>(k)](0, 0) = a.coeff(m - k);
    B[static_cast<std::size_t>(k)](0, 1) = b.coeff(m - k);
    B[static_cast<std::size_t>(k)](1, 0) = c.coeff(m - k);
    B[static_cast<std::size_t>(k)](1, 1) = d.coeff(m - k);
  }
  return MatrixPolynomial(2, m, B);
}

Diagnostic::Level level_of(const SpectralCurveData& c, const std::string& name) {
  for (const auto& d : c.diagnostics)
    if (d.name == name) return d.level;
  FAIL("missing diagnostic " << name);
  return Diagnostic::Level::fatal;
}

}  // namespace

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(MatrixPolynomial(2, 1, {M(2, {1, 1, 0, 2}), M(2, {0, 0, 0, 0})}), InputError);
  CHECK_THROWS_AS(MatrixPolynomial(2, 1, {M(2, {1, 0, 0, 2})}), InputError);
  CHECK_THROWS_AS(MatrixPolynomial(1, 1, {M(1, {1}), M(1, {0})}), InputError);
}

TEST_CASE("characteristic polynomial, diagonal example") {
  auto W = two_by_two(P({0, 0, 1}), P({}), P({}), P({0, 0, -1}), 2);
  auto c = characteristic_data(W);
  CHECK(c.a[1].is_zero());
  CHECK(c.a[2] == P({0, 0, 0, 0, -1}));
  CHECK(level_of(c, "distinct_leading_eigenvalues") == Diagnostic::Level::pass);
  CHECK(level_of(c, "squarefree_discriminant") == Diagnostic::Level::warning);
}

TEST_CASE("characteristic polynomial against 2x2 cofactor oracle") {
  auto W = two_by_two(P({0, 0, 1}), P({0, 1}), P({1}), P({0, 0, -1}), 2);
  auto c = characteristic_data(W);
  CHECK(c.a[1].is_zero());
  CHECK(c.a[2] == P({0, -1, 0, 0, -1}));  // R = w^2 - z^4 - z
  CHECK(discriminant_w(c) == P({0, 4, 0, 0, 4}));
  for (const auto& d : c.diagnostics) CHECK_MESSAGE(d.level == Diagnostic::Level::pass, d.name);

  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    Poly a = P({random_rational(rng), random_rational(rng), 1}), d = P({random_rational(rng), random_rational(rng), 3});
    Poly b = P({random_rational(rng), random_rational(rng)}), e = P({random_rational(rng), random_rational(rng)});
    auto cd = characteristic_data(two_by_two(a, b, e, d, 2));
    CHECK(cd.a[1] == -(a + d));
    CHECK(cd.a[2] == a * d - b * e);
    Poly tr = a + d, det = a * d - b * e;
    CHECK(discriminant_w(cd) == tr * tr - Rational(4) * det);
  }
}

TEST_CASE("genus formula") {
  CHECK(genus(2, 2) == 1);
  CHECK(genus(1, 3) == 1);
  CHECK(genus(3, 2) == 2);
  CHECK(genus(2, 3) == 4);
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(genus(m, n) + n - 1 == m * n * (n - 1) / 2);
}

TEST_CASE("fatal diagnostics") {
  auto W = MatrixPolynomial(2, 1, {M(2, {1, 0, 0, 1}), M(2, {0, 1, 1, 0})});
  CHECK(characteristic_data(W).fatal());
}

TEST_CASE("property: a1 = -tr W and invariance under diagonal conjugation") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + t % 3, m = 1 + t % 2;
    auto W = random_matrix_polynomial(rng, n, m);
    auto c = characteristic_data(W);
    Poly tr;
    for (int k = 0; k <= m; ++k) tr += Poly::monomial(W.coefficient(k).trace(), m - k);
    CHECK(c.a[1] == -tr);
    std::vector<Rational> d;
    for (int i = 0; i < n; ++i) {
      Rational x = random_rational(rng);
      d.push_back(is_zero(x) ? Rational(7) : x);
    }
    auto c2 = characteristic_data(W.conjugated_by_diagonal(d));
    CHECK(c2.a == c.a);
  }
}

TEST_CASE("branch expansions") {
  auto W = two_by_two(P({0, 0, 1}), P({0, 1}), P({1}), P({0, 0, -1}), 2);
  auto c = characteristic_data(W);
  auto w1 = branch_series(c, W, 0, 6);
  auto s = sqrt_series_coeffs(P({0, 1, 0, 0, 1}), 7);
  for (int k = 0; k <= 6; ++k) CHECK(w1.at(2 - k) == s[static_cast<std::size_t>(k)]);
  CHECK(w1.at(-1) == R("1/2"));
  CHECK(w1.at(-4) == R("-1/8"));

  auto D = two_by_two(P({0, 0, 1}), P({}), P({}), P({0, 0, -1}), 2);
  auto wd = branch_series(characteristic_data(D), D, 0, 5);
  CHECK(wd == TailSeries(2, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("property: branches sum to -a1") {
  Rng rng(6);
  for (int t = 0; t < 6; ++t) {
    int n = 2 + t % 2, m = 1 + t % 2;
    auto W = random_matrix_polynomial(rng, n, m);
    auto c = characteristic_data(W);
    TailSeries sum;
    for (int a = 0; a < n; ++a) {
      auto w = branch_series(c, W, a, 6);
      sum = a == 0 ? w : sum + w;
    }
    for (long e = m; e >= m - 6; --e) CHECK(sum.at(e) == -c.a[1].coeff(static_cast<int>(e)));
  }
}
