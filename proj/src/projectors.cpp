#include "spectau/projectors.hpp"

namespace spectau {

namespace {

// Work in v = w / z^m and u = 1/z: every series below has lead 0, so no
// order is lost when dividing by R_w.
TailSeries normalized(const Poly& p, int degree, long order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (long k = 0; k <= order && k <= degree; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<int>(degree - k));
  return TailSeries(0, std::move(c));
}

MatrixTailSeries normalized(const PolyMatrix& p, int degree, long order) {
  int n = p.size();
  std::vector<RatMatrix> c(static_cast<std::size_t>(order) + 1, RatMatrix(n, Rational(0)));
  for (long k = 0; k <= order && k <= degree; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(k)](i, j) = p(i, j).coeff(static_cast<int>(degree - k));
  return MatrixTailSeries(n, 0, std::move(c));
}

void require_distinct(const SpectralCurveData& curve) {
  for (const auto& d : curve.diagnostics)
    if (d.name == "distinct_leading_eigenvalues" && d.level == Diagnostic::Level::fatal)
      throw InputError("branches collide at infinity");
}

bool all_zero(const TailSeries& s) {
  for (const auto& c : s.coeffs())
    if (!is_zero(c)) return false;
  return true;
}

struct Normalized {
  TailSeries v;
  TailSeries dp;
};

Normalized solve_branch(const SpectralCurveData& curve, const MatrixPolynomial& W, int a, long order) {
  require_distinct(curve);
  if (a < 0 || a >= curve.n) throw std::out_of_range("sheet index out of range");
  int n = curve.n, m = curve.m;
  std::vector<TailSeries> at;
  for (int i = 0; i <= n; ++i) at.push_back(normalized(curve.a[static_cast<std::size_t>(i)], m * i, order));

  auto eval = [&](const TailSeries& v) {
    TailSeries p = at[0], dp = at[0] * Rational(n);
    for (int i = 1; i <= n; ++i) {
      p = p * v + at[static_cast<std::size_t>(i)];
      if (i < n) dp = dp * v + at[static_cast<std::size_t>(i)] * Rational(n - i);
    }
    return std::make_pair(p, dp);
  };

  TailSeries v = TailSeries::constant(W.leading_eigenvalue(a), order);
  int iterations = 2;
  for (long span = 1; span <= order; span *= 2) ++iterations;
  for (int it = 0; it < iterations; ++it) {
    auto [p, dp] = eval(v);
    if (all_zero(p)) return {v, dp};
    v = v - p * series_invert(dp);
  }
  auto [p, dp] = eval(v);
  if (!all_zero(p)) throw std::logic_error("branch expansion did not satisfy R(z, w) = 0");
  return {v, dp};
}

MatrixTailSeries phi_normalized(const SpectralCurveData& curve, const TailSeries& v, long order) {
  int m = curve.m;
  MatrixTailSeries phi = normalized(curve.b[0], 0, order);
  for (int i = 1; i < curve.n; ++i) phi = v * phi + normalized(curve.b[static_cast<std::size_t>(i)], m * i, order);
  return phi;
}

BranchExpansion expand_sheet(const SpectralCurveData& curve, const MatrixPolynomial& W, int a, long order) {
  Normalized nb = solve_branch(curve, W, a, order);
  BranchExpansion out;
  out.sheet = a;
  out.w = TailSeries(curve.m, nb.v.coeffs());
  out.r_w = TailSeries(static_cast<long>(curve.m) * (curve.n - 1), nb.dp.coeffs());
  out.pi = series_invert(nb.dp) * phi_normalized(curve, nb.v, order);
  return out;
}

}  // namespace

PhiData phi_coefficients(const SpectralCurveData& curve, const MatrixPolynomial& W) {
  PhiData out{curve.b};
  // Faddeev-LeVerrier already produced b_i = sum_j a_j W^(i-j); recheck the top relation
  // b_{n-1} W + a_n = 0 (Cayley-Hamilton) so a mismatched pair cannot slip through.
  PolyMatrix top = curve.b.back() * W.as_poly_matrix();
  for (int i = 0; i < curve.n; ++i) top(i, i) += curve.a.back();
  for (const auto& e : top.data())
    if (!e.is_zero()) throw std::invalid_argument("curve data does not belong to this matrix polynomial");
  return out;
}

TailSeries branch_series(const SpectralCurveData& curve, const MatrixPolynomial& W, int a, long order) {
  return TailSeries(curve.m, solve_branch(curve, W, a, order).v.coeffs());
}

MatrixTailSeries projector_series(const MatrixPolynomial& W, int a, long order) {
  SpectralCurveData curve = characteristic_data(W);
  return expand_sheet(curve, W, a, order).pi;
}

ProjectorSet compute_projectors(const SpectralCurveData& curve, const MatrixPolynomial& W, long order) {
  if (order < 0) throw std::invalid_argument("projector order must be nonnegative");
  ProjectorSet out;
  out.n = curve.n;
  out.m = curve.m;
  out.order = order;
  out.sheets.resize(static_cast<std::size_t>(curve.n));
  for (int a = 0; a < curve.n; ++a) out.sheets[static_cast<std::size_t>(a)] = expand_sheet(curve, W, a, order);
  return out;
}

ProjectorSet compute_projectors(const MatrixPolynomial& W, long order) {
  return compute_projectors(characteristic_data(W), W, order);
}

}  // namespace spectau
