#include <doctest.h>

#include "helpers.hpp"
#include "spectau/projectors.hpp"

using namespace testing_util;

TEST_CASE("Phi coefficients for traceless W") {
  // n = 2: Phi = w + W. n = 3: Phi = w^2 + w W + W^2 + p.
  auto W2 = g1_instance();
  auto c2 = characteristic_data(W2);
  auto phi2 = phi_coefficients(c2, W2);
  REQUIRE(phi2.b.size() == 2);
  CHECK(phi2.b[1] == W2.as_poly_matrix());

  Rng rng(7);
  auto W3 = random_matrix_polynomial(rng, 3, 1, {.traceless = true});
  auto c3 = characteristic_data(W3);
  auto phi3 = phi_coefficients(c3, W3);
  PolyMatrix w = W3.as_poly_matrix();
  CHECK(phi3.b[1] == w);
  PolyMatrix w2p = w * w;
  for (int i = 0; i < 3; ++i) w2p(i, i) += c3.a[2];
  CHECK(phi3.b[2] == w2p);
}

TEST_CASE("diagonal W gives coordinate projectors") {
  auto D = diagonal_w(3, 2);
  auto proj = compute_projectors(D, 6);
  for (int a = 0; a < 3; ++a) {
    RatMatrix e(3, Rational(0));
    e(a, a) = 1;
    CHECK(proj.pi(a).at(0) == e);
    for (long k = 1; k <= 6; ++k) CHECK(proj.pi(a).at(-k) == RatMatrix(3, Rational(0)));
  }
}

TEST_CASE("projector leading correction for [[z^2, z],[z, -z^2]]") {
  auto W = MatrixPolynomial(2, 2, {M(2, {1, 0, 0, -1}), M(2, {0, 1, 1, 0}), M(2, {0, 0, 0, 0})});
  auto pi = projector_series(W, 0, 3);
  CHECK(pi.at(0) == M(2, {1, 0, 0, 0}));
  CHECK(pi.at(-1) == M(2, {0, R("1/2"), R("1/2"), 0}));
}

TEST_CASE("n = 2 traceless: Pi = (1 +- W/w)/2") {
  Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    int g = 1 + t % 2;
    auto s = random_hyperelliptic(rng, g, false);
    auto W = hyperelliptic_matrix(s.a, s.b, s.c);
    const long K = 8;
    auto sq = sqrt_series_coeffs(hyperelliptic_q(s.a, s.b, s.c), static_cast<int>(K) + g + 2);
    TailSeries w(g + 1, std::vector<Rational>(sq.begin(), sq.begin() + K + g + 2));
    TailSeries inv = series_invert(w);
    auto Wser = matrix_series_from_poly(W.as_poly_matrix(), -K);
    MatrixTailSeries ratio = inv * Wser;
    auto proj = compute_projectors(W, K);
    for (long k = 0; k <= K; ++k) {
      RatMatrix plus(2, Rational(0)), minus(2, Rational(0));
      RatMatrix r = ratio.at(-k);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Rational id = (i == j && k == 0) ? Rational(1) : Rational(0);
          plus(i, j) = (id + r(i, j)) / 2;
          minus(i, j) = (id - r(i, j)) / 2;
        }
      CHECK(proj.pi(0).at(-k) == plus);
      CHECK(proj.pi(1).at(-k) == minus);
    }
  }
}

TEST_CASE("property: projector identities") {
  Rng rng(9);
  const long K = 10;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}}) {
    auto W = random_matrix_polynomial(rng, n, m);
    auto proj = compute_projectors(W, K);
    MatrixTailSeries sum = proj.pi(0);
    MatrixTailSeries recon = proj.sheets[0].w * proj.pi(0);
    for (int a = 0; a < n; ++a) {
      const auto& pa = proj.pi(a);
      CHECK(pa * pa == pa);
      auto tr = pa.trace();
      CHECK(tr.at(0) == 1);
      for (long k = 1; k <= K; ++k) CHECK(is_zero(tr.at(-k)));
      for (int b = 0; b < n; ++b)
        if (b != a) CHECK(is_zero_series(pa * proj.pi(b)));
      if (a > 0) {
        sum = sum + pa;
        recon = recon + proj.sheets[static_cast<std::size_t>(a)].w * pa;
      }
    }
    CHECK(sum == identity_series(n, K));
    auto expect = matrix_series_from_poly(W.as_poly_matrix(), recon.floor());
    CHECK(recon == expect.truncated(recon.order()));
  }
}

TEST_CASE("property: diagonal conjugation acts entrywise") {
  Rng rng(10);
  auto W = random_matrix_polynomial(rng, 3, 1);
  std::vector<Rational> d = {2, R("-1/3"), 5};
  auto p = compute_projectors(W, 5);
  auto q = compute_projectors(W.conjugated_by_diagonal(d), 5);
  for (int a = 0; a < 3; ++a)
    for (long k = 0; k <= 5; ++k) {
      RatMatrix x = p.pi(a).at(-k), y = q.pi(a).at(-k);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(y(i, j) == x(i, j) * d[static_cast<std::size_t>(j)] / d[static_cast<std::size_t>(i)]);
    }
}
