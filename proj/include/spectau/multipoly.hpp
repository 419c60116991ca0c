#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "spectau/rational.hpp"

namespace spectau {

struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Sparse polynomial in u_1..u_N over Q. Zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  // u_i - u_j
  static MultiPoly difference(int nvars, int i, int j);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Exponent& e) const;
  int degree() const;  // -1 for zero

  void add_term(const Exponent& e, const Rational& c);
  MultiPoly truncated(int max_total_degree) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, -1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.t_ == b.t_; }

  // Product keeping only monomials of total degree <= cap (cap < 0: keep all).
  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, int cap);

 private:
  int nvars_;
  std::map<Exponent, Rational> t_;
};

// Power-series style exact division. Monomials of the numerator above
// trusted_total_degree are treated as unknown. The quotient is built degree
// by degree against the lex-leading monomial of the divisor's lowest
// homogeneous part; a monomial at or below the trusted degree that cannot be
// cancelled raises DivisionError.
MultiPoly multipoly_exact_divide(const MultiPoly& numerator, const MultiPoly& divisor, int trusted_total_degree);

}  // namespace spectau
