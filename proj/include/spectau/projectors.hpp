#pragma once

#include <vector>

#include "spectau/curve.hpp"
#include "spectau/series.hpp"

namespace spectau {

// Phi(z, w) = sum_i b_i(z) w^(n-1-i), b_0 = 1.
struct PhiData {
  std::vector<PolyMatrix> b;
};

PhiData phi_coefficients(const SpectralCurveData& curve, const MatrixPolynomial& W);

struct BranchExpansion {
  int sheet = 0;
  TailSeries w;    // lead m, leading coefficient b0_a
  TailSeries r_w;  // R_w(z, w_a(z)), lead m(n-1)
  MatrixTailSeries pi;  // E_a + O(1/z)
};

// w_a(z) through z^(m - order).
TailSeries branch_series(const SpectralCurveData& curve, const MatrixPolynomial& W, int a, long order);

// Pi_a(z) through z^(-order).
MatrixTailSeries projector_series(const MatrixPolynomial& W, int a, long order);

// All sheets at once, sharing the characteristic data.
struct ProjectorSet {
  int n = 0;
  int m = 0;
  long order = 0;
  std::vector<BranchExpansion> sheets;

  const MatrixTailSeries& pi(int a) const { return sheets[static_cast<std::size_t>(a)].pi; }
};

ProjectorSet compute_projectors(const MatrixPolynomial& W, long order);
ProjectorSet compute_projectors(const SpectralCurveData& curve, const MatrixPolynomial& W, long order);

}  // namespace spectau
