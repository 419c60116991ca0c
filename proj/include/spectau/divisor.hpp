#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spectau/curve.hpp"
#include "spectau/hyperelliptic.hpp"

namespace spectau {

struct DivisorPoint {
  std::complex<double> z;
  std::complex<double> w;
  double residual_R = 0;    // |R(z, w)|
  double residual_eig = 0;  // max_i |sum_s Delta_is(z, w)|
};

struct DivisorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// det of the rows (1,...,1) W^k, k = 0..n-1.
Poly d_polynomial(const MatrixPolynomial& W);

// q(i, j) for i = 0..n-1, j = 0..n-1: sum_s Delta_is(z, w) = sum_j q(i, j) w^(n-1-j), q(i, 0) = 1.
std::vector<std::vector<Poly>> cofactor_row_sums(const MatrixPolynomial& W);

struct DivisorReport {
  std::vector<DivisorPoint> points;
  std::vector<DivisorPoint> rejected;
  std::vector<std::string> warnings;
  int expected_count = 0;
  double tolerance = 0;
};

DivisorReport pole_divisor_report(const MatrixPolynomial& W, double tol = 1e-9);
// Accepted points only; throws DivisorError if any root is rejected.
std::vector<DivisorPoint> pole_divisor(const MatrixPolynomial& W, double tol = 1e-9);

struct HyperellipticDivisorComparison {
  DivisorReport general;
  // Roots of a = (b + c)/2 with w = (c - b)/2, residuals as for DivisorPoint.
  std::vector<DivisorPoint> closed_form;
  // For each general point: index of the closed-form point with the same z, or -1.
  std::vector<int> z_match;
  // For each general point: whether the matching closed-form point also has the same w.
  std::vector<bool> w_match;
  std::string summary;
};

HyperellipticDivisorComparison hyperelliptic_divisor(const Poly& a, const Poly& b, const Poly& c, double tol = 1e-9);

}  // namespace spectau
