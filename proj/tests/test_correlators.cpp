#include <doctest.h>

#include "helpers.hpp"
#include "spectau/correlators.hpp"
#include "spectau/io.hpp"

using namespace testing_util;

TEST_CASE("diagonal W has vanishing correlators") {
  auto D = diagonal_w(3, 1);
  for (int N = 2; N <= 3; ++N) {
    auto t = correlator_table(D, N, 1);
    for (const auto& [key, v] : t.entries) CHECK(is_zero(v));
  }
}

TEST_CASE("hyperelliptic example values") {
  auto W = g1_instance();
  auto t2 = correlator_table(W, 2, 1);
  CHECK(difference_correlator(t2, {0, 0}) == -2);
  CHECK(difference_correlator(t2, {0, 1}) == -2);
  CHECK(difference_correlator(t2, {1, 1}) == 2);
  auto t3 = correlator_table(W, 3, 0);
  CHECK(difference_correlator(t3, {0, 0, 0}) == -4);
}

TEST_CASE("3x3 example value") {
  auto W = MatrixPolynomial(3, 1, {M(3, {0, 0, 0, 0, 1, 0, 0, 0, 3}), M(3, {0, 2, 0, 5, 0, 0, 0, 0, 0})});
  CHECK(correlator_pair(W, 0, 1, 0).at({0, 1}, {0, 0}) == 10);
}

TEST_CASE("F123 against the three-sheet closed form") {
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    auto W = random_matrix_polynomial(rng, 3, 1 + t % 2, {.traceless = true});
    const RatMatrix& b0 = W.coefficient(0);
    const RatMatrix& b1 = W.coefficient(1);
    Rational expect = (b1(0, 1) * b1(1, 2) * b1(2, 0) - b1(0, 2) * b1(2, 1) * b1(1, 0)) /
                      ((b0(0, 0) - b0(1, 1)) * (b0(1, 1) - b0(2, 2)) * (b0(2, 2) - b0(0, 0)));
    CHECK(correlator_n(W, {0, 1, 2}, 0).at({0, 1, 2}, {0, 0, 0}) == expect);
  }
}

TEST_CASE("truncation and stability") {
  CHECK(correlator_truncation(2, 3) >= 2 * 3);
  auto W = three_by_three();
  auto proj = compute_projectors(W, 2);
  CHECK_THROWS_AS(correlator_n(proj, {0, 1}, 4), TruncationError);
  CorrelatorOptions a, b;
  b.stability_check = false;
  CHECK(correlator_table(W, 3, 1, a).entries == correlator_table(W, 3, 1, b).entries);
}

TEST_CASE("property: slot sums vanish, permutation symmetry, conjugation invariance") {
  Rng rng(12);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}}) {
    auto W = random_matrix_polynomial(rng, n, m);
    for (int N = 2; N <= 3; ++N) {
      int kmax = N == 2 ? 2 : 1;
      auto t = correlator_table(W, N, kmax);
      // slot sums
      for (const auto& [key, v] : t.entries) {
        if (key.a[0] != 0) continue;
        Rational s = 0;
        for (int a = 0; a < n; ++a) {
          IndexTuple aa = key.a;
          aa[0] = a;
          s += t.at(aa, key.k);
        }
        CHECK(is_zero(s));
      }
      // simultaneous permutation of (a_i, k_i)
      for (const auto& [key, v] : t.entries) {
        IndexTuple a = key.a, k = key.k;
        std::rotate(a.begin(), a.begin() + 1, a.end());
        std::rotate(k.begin(), k.begin() + 1, k.end());
        CHECK(t.at(a, k) == v);
      }
      std::vector<Rational> d;
      for (int i = 0; i < n; ++i) d.push_back(make_rational(i + 2, 2 * i + 1) * (i % 2 ? -1 : 1));
      auto tc = correlator_table(W.conjugated_by_diagonal(d), N, kmax);
      CHECK(tc.entries == t.entries);
    }
  }
}

TEST_CASE("free energy coefficients") {
  auto W = g1_instance();
  auto f = free_energy(W, 2, 1);
  auto t = correlator_table(W, 2, 1);
  // coefficient of t^a_k t^b_l equals F^{ab}_{kl} for distinct labels, F/2 for a repeated one
  CHECK(f.at({{0, 0}, {1, 1}}) == t.at({0, 1}, {0, 1}));
  CHECK(f.at({{0, 1}, {0, 1}}) == t.at({0, 0}, {1, 1}) / 2);
  auto fd = free_energy(diagonal_w(2, 2), 3, 1);
  for (const auto& [labels, c] : fd) CHECK(is_zero(c));
}

TEST_CASE("table serialization round trips exactly") {
  auto t = correlator_table(three_by_three(), 2, 1);
  Json j = correlator_table_json(t);
  CHECK(j["N"] == 2);
  for (const auto& e : j["entries"]) {
    IndexTuple a;
    for (int x : e["a"]) a.push_back(x - 1);
    CHECK(parse_rational(e["value"].get<std::string>()) == t.at(a, e["k"].get<IndexTuple>()));
  }
}
