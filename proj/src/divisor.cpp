#include "spectau/divisor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spectau {

Poly d_polynomial(const MatrixPolynomial& W) {
  int n = W.n();
  PolyMatrix w = W.as_poly_matrix();
  PolyMatrix power = poly_identity(n);
  PolyMatrix rows(n, Poly());
  for (int k = 0; k < n; ++k) {
    if (k > 0) power = power * w;
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int i = 0; i < n; ++i) s += power(i, j);
      rows(k, j) = s;
    }
  }
  return determinant(rows);
}

std::vector<std::vector<Poly>> cofactor_row_sums(const MatrixPolynomial& W) {
  // adj(w - W) = sum_j b_j(z) w^(n-1-j) and Delta_is = adj_si, so row sums of
  // cofactors are column sums of the b_j.
  SpectralCurveData curve = characteristic_data(W);
  int n = W.n();
  std::vector<std::vector<Poly>> q(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly s;
      for (int r = 0; r < n; ++r) s += curve.b[static_cast<std::size_t>(j)](r, i);
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  return q;
}

namespace {

using cd = std::complex<double>;
using cl = std::complex<long double>;

double coefficient_scale(const MatrixPolynomial& W) {
  double s = 1;
  for (const auto& mat : W.coefficients())
    for (const auto& x : mat.data()) s = std::max(s, std::abs(x.get_d()));
  return s;
}

long double to_ld(const Rational& x) {
  if (x.get_num().fits_slong_p() && x.get_den().fits_slong_p())
    return static_cast<long double>(x.get_num().get_si()) / static_cast<long double>(x.get_den().get_si());
  return static_cast<long double>(x.get_d());
}

cl eval_ld(const Poly& p, cl z) {
  const auto& c = p.coeffs();
  cl acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + to_ld(c[k]);
  return acc;
}

cl eval_r(const SpectralCurveData& curve, cl z, cl w, bool dz, bool dw) {
  cl acc = 0;
  int n = curve.n;
  for (int i = 0; i <= n; ++i) {
    int p = n - i;
    const Poly& a = curve.a[static_cast<std::size_t>(i)];
    cl coef = dz ? eval_ld(a.derivative(), z) : eval_ld(a, z);
    if (dw) {
      if (p == 0) continue;
      acc += coef * static_cast<long double>(p) * std::pow(w, p - 1);
    } else {
      acc += coef * std::pow(w, p);
    }
  }
  return acc;
}

double eig_residual(const std::vector<std::vector<Poly>>& q, cl z, cl w) {
  long double worst = 0;
  std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    cl s = 0;
    for (std::size_t j = 0; j < n; ++j) s = s * w + eval_ld(q[i][j], z);
    worst = std::max(worst, std::abs(s));
  }
  return static_cast<double>(worst);
}

// Sum of |monomial| sizes of R at (z, w): the scale against which |R| is judged.
double r_magnitude(const SpectralCurveData& curve, cd z, cd w) {
  double s = 0;
  int n = curve.n;
  for (int i = 0; i <= n; ++i) {
    const auto& c = curve.a[static_cast<std::size_t>(i)].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
      s += std::abs(c[k].get_d()) * std::pow(std::abs(z), static_cast<double>(k)) * std::pow(std::abs(w), n - i);
  }
  return std::max(1.0, s);
}

// Newton polish of a double root against the exact polynomial.
cl polish_root(const Poly& d, cd z0) {
  Poly dd = d.derivative();
  cl z(z0.real(), z0.imag());
  for (int it = 0; it < 4; ++it) {
    cl f = eval_ld(d, z), fp = eval_ld(dd, z);
    if (fp == cl(0)) break;
    z -= f / fp;
  }
  return z;
}

cl widen(cd x) { return cl(x.real(), x.imag()); }
cd narrow(cl x) { return cd(static_cast<double>(x.real()), static_cast<double>(x.imag())); }

}  // namespace

DivisorReport pole_divisor_report(const MatrixPolynomial& W, double tol) {
  SpectralCurveData curve = characteristic_data(W);
  if (curve.fatal()) throw InputError("matrix polynomial fails validation; divisor undefined");
  int n = W.n();
  DivisorReport report;
  report.tolerance = tol;
  report.expected_count = W.m() * n * (n - 1) / 2;

  Poly d = d_polynomial(W);
  if (d.degree() < report.expected_count) {
    std::ostringstream os;
    os << "degenerate divisor configuration: deg D = " << d.degree() << " < " << report.expected_count;
    report.warnings.push_back(os.str());
  }
  if (d.degree() < 1) return report;
  std::vector<cd> zs = roots(d);
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (std::abs(zs[i] - zs[j]) <= tol)
        throw DivisorError("D(z) has a repeated root; divisors with multiplicities are not supported");

  auto q = cofactor_row_sums(W);
  double scale = coefficient_scale(W);
  using MatL = Eigen::Matrix<cl, Eigen::Dynamic, Eigen::Dynamic>;
  for (cd z0 : zs) {
    cl zl = polish_root(d, z0);
    cd z = narrow(zl);
    zl = widen(z);
    MatL c(n, n - 1), chat(n, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + 1 < n; ++j) {
        c(i, j) = eval_ld(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], zl);
        chat(i, j) = c(i, j);
      }
    for (int i = 0; i < n; ++i) chat(i, n - 2) = eval_ld(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)], zl);

    // Omitting the last row first gives the lexicographically smallest row set on ties.
    long double best = -1;
    cl det_c = 0, det_chat = 0;
    for (int omit = n - 1; omit >= 0; --omit) {
      MatL mc(n - 1, n - 1), mh(n - 1, n - 1);
      for (int i = 0, r = 0; i < n; ++i) {
        if (i == omit) continue;
        mc.row(r) = c.row(i);
        mh.row(r) = chat.row(i);
        ++r;
      }
      cl dc = mc.determinant();
      if (std::abs(dc) > best) {
        best = std::abs(dc);
        det_c = dc;
        det_chat = mh.determinant();
      }
    }
    if (best <= tol) throw DivisorError("rank deficiency: every (n-1)-minor vanishes at a root of D(z)");

    DivisorPoint p;
    p.z = z;
    p.w = narrow(-det_chat / det_c);
    // residuals at the rounded point, evaluated in extended precision
    cl wl = widen(p.w);
    p.residual_R = static_cast<double>(std::abs(eval_r(curve, zl, wl, false, false)));
    p.residual_eig = eig_residual(q, zl, wl);
    double mag = r_magnitude(curve, z, p.w);
    bool on_curve = p.residual_R < tol * mag && p.residual_eig < tol * mag * scale;
    double rz = static_cast<double>(std::abs(eval_r(curve, zl, wl, true, false)));
    double rw = static_cast<double>(std::abs(eval_r(curve, zl, wl, false, true)));
    bool singular = rz < 1e-6 * mag && rw < 1e-6 * mag;
    if (singular) {
      std::ostringstream os;
      os << "degenerate: divisor point z = " << z << " sits on a singular point of the curve";
      report.warnings.push_back(os.str());
    }
    if (on_curve && !singular)
      report.points.push_back(p);
    else
      report.rejected.push_back(p);
  }
  return report;
}

std::vector<DivisorPoint> pole_divisor(const MatrixPolynomial& W, double tol) {
  DivisorReport r = pole_divisor_report(W, tol);
  if (!r.rejected.empty()) {
    std::ostringstream os;
    os << r.rejected.size() << " divisor point(s) rejected";
    for (const auto& w : r.warnings) os << "; " << w;
    throw DivisorError(os.str());
  }
  return r.points;
}

HyperellipticDivisorComparison hyperelliptic_divisor(const Poly& a, const Poly& b, const Poly& c, double tol) {
  MatrixPolynomial W = hyperelliptic_matrix(a, b, c);
  HyperellipticDivisorComparison out;
  out.general = pole_divisor_report(W, tol);

  SpectralCurveData curve = characteristic_data(W);
  auto q = cofactor_row_sums(W);
  Poly eq = a - (b + c) * Rational(1, 2);
  Poly wz = (c - b) * Rational(1, 2);
  if (eq.degree() >= 1)
    for (cd z : roots(eq)) {
      DivisorPoint p;
      p.z = z;
      p.w = wz.eval(z);
      p.residual_R = static_cast<double>(std::abs(eval_r(curve, widen(z), widen(p.w), false, false)));
      p.residual_eig = eig_residual(q, widen(z), widen(p.w));
      out.closed_form.push_back(p);
    }

  int agree = 0;
  for (const auto& g : out.general.points) {
    int idx = -1;
    for (std::size_t j = 0; j < out.closed_form.size(); ++j)
      if (std::abs(out.closed_form[j].z - g.z) < 1e-8 * std::max(1.0, std::abs(g.z))) idx = static_cast<int>(j);
    out.z_match.push_back(idx);
    bool wm = idx >= 0 && std::abs(out.closed_form[static_cast<std::size_t>(idx)].w - g.w) < 1e-8 * std::max(1.0, std::abs(g.w));
    out.w_match.push_back(wm);
    if (wm) ++agree;
  }
  double worst = 0;
  for (const auto& p : out.closed_form) worst = std::max(worst, p.residual_R);
  std::ostringstream os;
  os << agree << " of " << out.general.points.size()
     << " eigenvector-pole points agree with the closed form a = (b+c)/2, w = (c-b)/2; "
     << "largest |R| at the closed-form points = " << worst;
  out.summary = os.str();
  return out;
}

}  // namespace spectau
