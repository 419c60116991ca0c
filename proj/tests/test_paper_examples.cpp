#include <doctest.h>

#include "helpers.hpp"
#include "spectau/correlators.hpp"
#include "spectau/divisor.hpp"
#include "spectau/io.hpp"
#include "spectau/jets.hpp"
#include "spectau/theta.hpp"

using namespace testing_util;

namespace {

std::string example(const char* name) { return std::string(PAPER_EXAMPLES) + "/" + name; }

}  // namespace

TEST_CASE("bundled genus one example") {
  auto W = load_matrix_polynomial(example("hyperelliptic_g1.json"));
  CHECK(W.coefficients() == g1_instance().coefficients());
  auto t = correlator_table(W, 2, 1);
  CHECK(difference_correlator(t, {0, 0}) == -2);
  CHECK(pole_divisor(W).size() == 2);
  CHECK(verify_main_theorem(W).pass);
}

TEST_CASE("bundled genus two example") {
  auto W = load_matrix_polynomial(example("hyperelliptic_g2.json"));
  CHECK(W.coefficients() == g2_instance().coefficients());
  auto rep = verify_main_theorem(W);
  CHECK(rep.pass);
  CHECK(rep.g == 2);
}

TEST_CASE("bundled 3x3 example") {
  auto W = load_matrix_polynomial(example("three_by_three.json"));
  CHECK(W.coefficients() == three_by_three().coefficients());
  CHECK(correlator_pair(W, 0, 1, 0).at({0, 1}, {0, 0}) == 10);
  auto j = jet_from_projectors(W);
  CHECK(validate_jet(j).ok());
  CHECK(pole_divisor(W).size() == 3);
}
