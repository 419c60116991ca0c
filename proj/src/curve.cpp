#include "spectau/curve.hpp"

#include <set>
#include <sstream>

namespace spectau {

MatrixPolynomial::MatrixPolynomial(int n, int m, std::vector<RatMatrix> coefficients)
    : n_(n), m_(m), b_(std::move(coefficients)) {
  if (n < 2) throw InputError("matrix size n must be at least 2");
  if (m < 1) throw InputError("degree m must be at least 1");
  if (static_cast<int>(b_.size()) != m + 1)
    throw InputError("expected " + std::to_string(m + 1) + " coefficient matrices, got " + std::to_string(b_.size()));
  for (const auto& c : b_)
    if (c.size() != n) throw InputError("coefficient matrix has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !is_zero(b_[0](i, j))) throw InputError("leading coefficient must be diagonal");
}

PolyMatrix MatrixPolynomial::as_poly_matrix() const {
  PolyMatrix p(n_, Poly());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<Rational> c(static_cast<std::size_t>(m_) + 1);
      for (int k = 0; k <= m_; ++k) c[static_cast<std::size_t>(m_ - k)] = b_[static_cast<std::size_t>(k)](i, j);
      p(i, j) = Poly(std::move(c));
    }
  return p;
}

MatrixPolynomial MatrixPolynomial::conjugated_by_diagonal(const std::vector<Rational>& d) const {
  std::vector<RatMatrix> c = b_;
  for (auto& mat : c)
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) mat(i, j) = mat(i, j) * d[static_cast<std::size_t>(j)] / d[static_cast<std::size_t>(i)];
  return MatrixPolynomial(n_, m_, std::move(c));
}

const char* level_name(Diagnostic::Level level) {
  switch (level) {
    case Diagnostic::Level::pass: return "pass";
    case Diagnostic::Level::warning: return "warning";
    case Diagnostic::Level::fatal: return "fatal";
  }
  return "?";
}

bool SpectralCurveData::fatal() const {
  for (const auto& d : diagnostics)
    if (d.level == Diagnostic::Level::fatal) return true;
  return false;
}

int genus(int m, int n) {
  if (n < 2 || m < 1) throw std::invalid_argument("genus needs n >= 2 and m >= 1");
  long twice = static_cast<long>(n - 1) * (static_cast<long>(m) * n - 2);
  if (twice % 2 != 0) throw std::logic_error("odd value of (n-1)(mn-2)");
  return static_cast<int>(twice / 2);
}

SpectralCurveData characteristic_data(const MatrixPolynomial& W) {
  SpectralCurveData out;
  out.n = W.n();
  out.m = W.m();
  int n = W.n();
  PolyMatrix w = W.as_poly_matrix();
  PolyMatrix mk = poly_identity(n);
  out.a.push_back(Poly(1));
  out.b.push_back(mk);
  for (int k = 1; k <= n; ++k) {
    PolyMatrix wm = w * mk;
    Poly ck = wm.trace() * Rational(-1, k);
    ck = Poly(ck.coeffs());
    out.a.push_back(ck);
    mk = wm;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
    if (k < n) out.b.push_back(mk);
  }
  out.genus = genus(W.m(), n);
  out.diagnostics = validate(W, out);
  return out;
}

namespace {

// Resultant of p and p' for a monic univariate p via the Sylvester matrix.
Rational monic_discriminant(const std::vector<Rational>& desc) {
  int n = static_cast<int>(desc.size()) - 1;
  if (n < 1) return 1;
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = desc[static_cast<std::size_t>(i)] * (n - i);
  int size = 2 * n - 1;
  RatMatrix s(size, Rational(0));
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) s(r, r + k) = desc[static_cast<std::size_t>(k)];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) s(n - 1 + r, r + k) = d[static_cast<std::size_t>(k)];
  Rational res = determinant(s);
  long sign_exp = static_cast<long>(n) * (n - 1) / 2;
  return sign_exp % 2 ? -res : res;
}

}  // namespace

Poly discriminant_w(const SpectralCurveData& curve) {
  int n = curve.n;
  int bound = curve.m * n * (n - 1);
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= bound; ++t) {
    Rational z = t;
    std::vector<Rational> desc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) desc[static_cast<std::size_t>(i)] = curve.a[static_cast<std::size_t>(i)].eval(z);
    xs.push_back(z);
    ys.push_back(monic_discriminant(desc));
  }
  return interpolate(xs, ys);
}

std::vector<Diagnostic> validate(const MatrixPolynomial& W, const SpectralCurveData& curve) {
  using L = Diagnostic::Level;
  std::vector<Diagnostic> out;
  int n = W.n();

  std::set<Rational> seen;
  bool distinct = true;
  for (int a = 0; a < n; ++a) distinct = seen.insert(W.leading_eigenvalue(a)).second && distinct;
  out.push_back({"distinct_leading_eigenvalues", distinct ? L::pass : L::fatal,
                 distinct ? "b0 entries pairwise distinct" : "branches collide at infinity"});

  bool degrees = true;
  std::ostringstream deg;
  for (int i = 1; i <= n; ++i) {
    int d = curve.a[static_cast<std::size_t>(i)].degree();
    if (d > W.m() * i) {
      degrees = false;
      deg << "deg a_" << i << " = " << d << " > " << W.m() * i << "; ";
    }
  }
  out.push_back({"degree_bounds", degrees ? L::pass : L::fatal, degrees ? "deg a_i <= m i" : deg.str()});

  Poly disc = discriminant_w(curve);
  bool sf = !disc.is_zero() && (disc.degree() == 0 || is_squarefree(disc));
  out.push_back({"squarefree_discriminant", sf ? L::pass : L::warning,
                 sf ? "disc_w R squarefree: affine part smooth"
                    : "disc_w R not squarefree: smoothness inconclusive (curve may be singular or reducible)"});

  int g = genus(W.m(), n);
  out.push_back({"genus", g > 0 ? L::pass : L::warning,
                 g > 0 ? "genus " + std::to_string(g) : "genus " + std::to_string(g) + " is not positive"});
  return out;
}

std::vector<Diagnostic> validate(const MatrixPolynomial& W) { return characteristic_data(W).diagnostics; }

std::complex<double> curve_value(const SpectralCurveData& curve, std::complex<double> z, std::complex<double> w) {
  std::complex<double> acc = 0;
  for (int i = 0; i <= curve.n; ++i) acc = acc * w + curve.a[static_cast<std::size_t>(i)].eval(z);
  return acc;
}

}  // namespace spectau
