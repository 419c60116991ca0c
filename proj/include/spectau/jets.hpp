#pragma once

#include <string>
#include <vector>

#include "spectau/curve.hpp"

namespace spectau {

// Values and x-derivatives of y_ij (i != j) at one point; diagonals are unused.
struct JetPoint {
  int n = 0;
  int depth = 0;  // 0: values, 1: + first derivatives, 2: + second derivatives
  RatMatrix y;
  std::vector<RatMatrix> dy;                // dy[b](i, j) = d y_ij / d x^b
  std::vector<std::vector<RatMatrix>> d2y;  // d2y[b][c](i, j)

  static JetPoint zero(int n, int depth);
};

struct JetResidue {
  std::string constraint;
  Rational value;
};

struct JetReport {
  std::vector<JetResidue> residues;  // every constraint instance
  bool ok() const;
};

JetReport validate_jet(const JetPoint& jet);

struct ResolventCoeffs {
  RatMatrix b1, b2, b3;
};

struct JetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ResolventCoeffs resolvent_coefficients(const JetPoint& jet, int a);

// Extraction from the 1/z, 1/z^2, 1/z^3 projector coefficients, with every
// redundant route cross-checked.
JetPoint jet_from_projectors(const MatrixPolynomial& W);

enum class TauLevel { l00, l01, l02 };

// d^2 log tau / d t^a_0 d t^b_l.
Rational tau_second_derivative(const JetPoint& jet, int a, int b, TauLevel level);

}  // namespace spectau
