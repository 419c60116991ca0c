#pragma once

#include <string>
#include <vector>

#include "spectau/poly.hpp"

namespace spectau {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// W(z) = B[0] z^m + B[1] z^(m-1) + ... + B[m]; B[0] diagonal.
class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  MatrixPolynomial(int n, int m, std::vector<RatMatrix> coefficients);

  int n() const { return n_; }
  int m() const { return m_; }
  // Coefficient of z^(m-k).
  const RatMatrix& coefficient(int k) const { return b_[static_cast<std::size_t>(k)]; }
  const std::vector<RatMatrix>& coefficients() const { return b_; }
  Rational leading_eigenvalue(int a) const { return b_[0](a, a); }

  PolyMatrix as_poly_matrix() const;
  // D^-1 W D for an invertible diagonal D.
  MatrixPolynomial conjugated_by_diagonal(const std::vector<Rational>& d) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<RatMatrix> b_;
};

struct Diagnostic {
  std::string name;
  enum class Level { pass, warning, fatal } level;
  std::string detail;
};

const char* level_name(Diagnostic::Level level);

struct SpectralCurveData {
  int n = 0;
  int m = 0;
  // a[0] = 1, a[i] coefficient of w^(n-i) in det(w - W(z)).
  std::vector<Poly> a;
  // b[i] = sum_{j<=i} a_j W^(i-j), i = 0..n-1 (Faddeev-LeVerrier by-products).
  std::vector<PolyMatrix> b;
  int genus = 0;
  std::vector<Diagnostic> diagnostics;

  bool fatal() const;
};

int genus(int m, int n);

SpectralCurveData characteristic_data(const MatrixPolynomial& W);

// Discriminant of R(z, w) with respect to w, as a polynomial in z.
Poly discriminant_w(const SpectralCurveData& curve);

// Distinct leading eigenvalues, degree bounds, squarefree discriminant, genus.
std::vector<Diagnostic> validate(const MatrixPolynomial& W, const SpectralCurveData& curve);
std::vector<Diagnostic> validate(const MatrixPolynomial& W);

// R(z, w) evaluated numerically.
std::complex<double> curve_value(const SpectralCurveData& curve, std::complex<double> z, std::complex<double> w);

}  // namespace spectau
