#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "spectau/matrix.hpp"
#include "spectau/rational.hpp"

namespace spectau {

// Univariate polynomial in z over Q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit on purpose, mirrors scalars
  explicit Poly(std::vector<Rational> ascending);

  static Poly monomial(const Rational& c, int power);
  static Poly z() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  Rational eval(const Rational& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder, b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Exact quotient; throws if the remainder is nonzero.
Poly exact_quotient(const Poly& a, const Poly& b);
// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
bool is_squarefree(const Poly& p);

// Newton interpolation through (x_i, y_i), distinct nodes.
Poly interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y);

// Complex roots via companion-matrix eigenvalues, polished by Newton steps.
std::vector<std::complex<double>> roots(const Poly& p);

using RatMatrix = SquareMatrix<Rational>;
using PolyMatrix = SquareMatrix<Poly>;

RatMatrix rat_identity(int n);
PolyMatrix poly_identity(int n);

// Exact determinants.
Rational determinant(RatMatrix m);
Poly determinant(PolyMatrix m);  // fraction-free Bareiss elimination

}  // namespace spectau
