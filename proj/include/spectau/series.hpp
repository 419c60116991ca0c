#pragma once

#include <stdexcept>
#include <vector>

#include "spectau/poly.hpp"

namespace spectau {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series in 1/z:
//   c[0] z^lead + c[1] z^(lead-1) + ... + c[K] z^(lead-K) + (unknown)
// K = order(). Exponents above lead are exactly zero; exponents below
// lead-K are unknown and reading them throws.
class TailSeries {
 public:
  TailSeries() = default;
  TailSeries(long lead, std::vector<Rational> coeffs);

  // Exact polynomial viewed as a series known down to z^floor.
  static TailSeries from_poly(const Poly& p, long floor);
  static TailSeries constant(const Rational& c, long order);

  long lead() const { return lead_; }
  long order() const { return static_cast<long>(c_.size()) - 1; }
  long floor() const { return lead_ - order(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient of z^e.
  Rational at(long e) const;

  TailSeries truncated(long order) const;
  // Drops leading zero coefficients (the order shrinks accordingly).
  TailSeries normalized() const;
  // Multiply by z^k.
  TailSeries shifted(long k) const;

  TailSeries operator-() const;
  friend TailSeries operator+(const TailSeries& a, const TailSeries& b);
  friend TailSeries operator-(const TailSeries& a, const TailSeries& b);
  friend TailSeries operator*(const TailSeries& a, const TailSeries& b);
  friend TailSeries operator*(const TailSeries& a, const Rational& s);
  friend TailSeries operator*(const Rational& s, const TailSeries& a) { return a * s; }
  friend bool operator==(const TailSeries& a, const TailSeries& b) {
    return a.lead_ == b.lead_ && a.c_ == b.c_;
  }

 private:
  long lead_ = 0;
  std::vector<Rational> c_;
};

TailSeries series_invert(const TailSeries& s);
TailSeries series_inv_sqrt(const TailSeries& s);

// Same discipline for n x n matrix coefficients.
class MatrixTailSeries {
 public:
  MatrixTailSeries() = default;
  MatrixTailSeries(int n, long lead, std::vector<RatMatrix> coeffs);

  int size() const { return n_; }
  long lead() const { return lead_; }
  long order() const { return static_cast<long>(c_.size()) - 1; }
  long floor() const { return lead_ - order(); }
  const std::vector<RatMatrix>& coeffs() const { return c_; }

  RatMatrix at(long e) const;
  TailSeries entry(int i, int j) const;
  TailSeries trace() const;
  MatrixTailSeries truncated(long order) const;

  friend MatrixTailSeries operator+(const MatrixTailSeries& a, const MatrixTailSeries& b);
  friend MatrixTailSeries operator-(const MatrixTailSeries& a, const MatrixTailSeries& b);
  friend MatrixTailSeries operator*(const MatrixTailSeries& a, const MatrixTailSeries& b);
  friend MatrixTailSeries operator*(const TailSeries& s, const MatrixTailSeries& a);
  friend bool operator==(const MatrixTailSeries& a, const MatrixTailSeries& b) {
    return a.n_ == b.n_ && a.lead_ == b.lead_ && a.c_ == b.c_;
  }

 private:
  int n_ = 0;
  long lead_ = 0;
  std::vector<RatMatrix> c_;
};

// Exact matrix polynomial (entries in z) as a matrix series down to z^floor.
MatrixTailSeries matrix_series_from_poly(const PolyMatrix& p, long floor);

}  // namespace spectau
