#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spectau/correlators.hpp"
#include "spectau/divisor.hpp"
#include "spectau/parallel.hpp"

namespace spectau {

using cd = std::complex<double>;
using CVector = std::vector<cd>;
using CMatrix = SquareMatrix<cd>;

struct ThetaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// w^2 = Q(z), Q monic of degree 2g+2. Branch points are ordered along the
// direction that best separates their projections; cuts are [e0,e1], [e2,e3], ...
struct HyperellipticCurve {
  Poly q;
  int g = 0;
  std::vector<cd> branch_points;
};

HyperellipticCurve make_hyperelliptic_curve(const Poly& q);

// Branch of sqrt(Q) with w ~ +z^(g+1) at infinity, cut along the cuts.
cd w_plus(const HyperellipticCurve& curve, cd z);

// exp(1/2 <n,Bn> + <n,u>) convention: a-periods of the normalized
// differentials are 2 pi i and Re B is negative definite.
struct ThetaContext {
  int g = 0;
  CMatrix a_periods;  // (i, j): integral of z^(g-1-i) dz / (2w) over a_j
  CMatrix b_periods;
  CMatrix alpha;      // 2 pi i a_periods^-1
  CMatrix B;
  bool flipped = false;  // B sign flipped to make Re B negative definite
  double quadrature_error = 0;
  double symmetry_error = 0;  // ||B - B^T|| / ||B||
  double decay = 0;           // smallest eigenvalue of -Re B
  int radius_cap = 40;
  std::vector<cd> branch_points;
};

ThetaContext period_matrix(const HyperellipticCurve& curve);

struct VData {
  std::vector<Rational> r;
  std::vector<CVector> v;  // v[k][i] = V^(k)_i
};

VData v_vectors(const HyperellipticCurve& curve, const ThetaContext& ctx, int kmax);

// Max deviation between the expansion coefficients of the normalized
// differentials at P+ (contour integrals on a large circle) and V^(k)/2.
double v_convention_error(const HyperellipticCurve& curve, const ThetaContext& ctx, const VData& v);

struct JacobianPoint {
  CVector u0;
  cd theta_value;
};

// Abel map of the divisor based at the first branch point, minus the half period
// pi i (1,0,1,0,...) + B (1,...,1)/2. path_variant selects one of two ray families.
JacobianPoint abel_u0(const HyperellipticCurve& curve, const ThetaContext& ctx, const std::vector<DivisorPoint>& divisor,
                      int path_variant = 0);

// Lattice coordinates (x, y) with u = 2 pi i x + B y.
std::vector<double> lattice_coordinates(const ThetaContext& ctx, const CVector& u);
// u with its lattice coordinates moved into [-1/2, 1/2).
CVector reduce_mod_lattice(const ThetaContext& ctx, const CVector& u);

// Truncated lattice sum of prod_{i in derivative} n_i exp(1/2 <n,Bn> + <n,u>).
cd theta(const CVector& u, const ThetaContext& ctx, const std::vector<int>& derivative = {},
         Execution execution = Execution::parallel);

// Sums over the lattice of prod_{j in S}<n, dirs_j> exp(...), for every subset S
// (bit mask) of the direction list.
std::vector<cd> directional_sums(const CVector& u, const ThetaContext& ctx, const std::vector<CVector>& dirs,
                                 Execution execution = Execution::parallel);

// Mixed derivative of log theta along the given directions (order >= 1).
cd log_theta_directional(const CVector& u, const ThetaContext& ctx, const std::vector<CVector>& dirs,
                         Execution execution = Execution::parallel);
// d^N log theta / du_{i1} ... du_{iN}.
cd log_theta_derivative(const CVector& u, const ThetaContext& ctx, const std::vector<int>& indices,
                        Execution execution = Execution::parallel);

struct IdentityCheck {
  IndexTuple k;
  Rational f;
  cd t;  // sum V...V d^N log theta(u0)
  double abs_err = 0;
  double rel_err = 0;
  bool pass = false;
};

struct ShiftRow {
  std::vector<int> m, n;  // half period pi i m + B n / 2
  double anchor_err = 0;  // relative error at N = 3, k = 0
  double worst_err = 0;   // worst relative error over all identities
};

struct ThetaReport {
  int g = 0;
  double tol = 0;
  std::vector<IdentityCheck> identities;
  std::vector<ShiftRow> shifts;
  std::size_t shift_used = 0;
  CVector u0;
  cd theta_u0;
  double symmetry_error = 0;
  double quadrature_error = 0;
  double quasi_periodicity_error = 0;
  double integer_period_error = 0;
  double evenness_error = 0;
  double v_convention_error = 0;
  double path_discrepancy = 0;
  bool b_negative_definite = false;
  bool pass = false;
  std::vector<std::string> failures;
};

struct ThetaOptions {
  int kmax = 2;           // N = 3 uses k_i <= kmax, N = 4 uses k_i <= kmax - 1
  double tol = 1e-6;
  Execution execution = Execution::parallel;
};

// W = [[a, b], [c, -a]] with leading coefficient diag(1, -1).
ThetaReport verify_main_theorem(const MatrixPolynomial& W, const ThetaOptions& options = {});

}  // namespace spectau
