#include "spectau/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace spectau {

Poly::Poly(const Rational& constant) {
  if (!spectau::is_zero(constant)) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power in Poly::monomial");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
  v[static_cast<std::size_t>(power)] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && spectau::is_zero(c_.back())) c_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (spectau::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1, Rational(0));
  Rational lb = b.leading();
  for (int k = da; k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = c;
    if (spectau::is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.leading();
  return a * inv;
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

Poly interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("interpolate: size mismatch");
  std::size_t n = x.size();
  std::vector<Rational> dd = y;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= Poly(std::vector<Rational>{-x[k], Rational(1)});
    result += Poly(dd[k]);
  }
  return result;
}

std::vector<std::complex<double>> roots(const Poly& p) {
  int d = p.degree();
  if (d < 1) return {};
  using CL = std::complex<long double>;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  double lead = p.leading().get_d();
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -p.coeff(i).get_d() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> out;
  std::vector<long double> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(k)] = static_cast<long double>(p.coeff(k).get_d());
  for (int i = 0; i < d; ++i) {
    CL z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      CL f = 0, df = 0;
      for (int k = d; k >= 0; --k) {
        df = df * z + f;
        f = f * z + c[static_cast<std::size_t>(k)];
      }
      if (std::abs(df) == 0) break;
      CL step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-18L * (1 + std::abs(z))) break;
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

RatMatrix rat_identity(int n) { return RatMatrix::identity(n, Rational(1), Rational(0)); }
PolyMatrix poly_identity(int n) { return PolyMatrix::identity(n, Poly(1), Poly()); }

Rational determinant(RatMatrix m) {
  int n = m.size();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      Rational f = m(r, col) / m(col, col);
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

Poly determinant(PolyMatrix m) {
  int n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Poly();
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace spectau
