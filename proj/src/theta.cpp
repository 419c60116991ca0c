#include "spectau/theta.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spectau/hyperelliptic.hpp"

namespace spectau {

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0, 1);

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.size(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  return e;
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
  CMatrix m(static_cast<int>(e.rows()), cd(0));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m(i, j) = e(i, j);
  return m;
}

// w_+ at z = e_k + delta, with the differences to e_k kept exact.
cd w_plus_near(const HyperellipticCurve& curve, std::size_t k, cd delta) {
  const auto& e = curve.branch_points;
  auto diff = [&](std::size_t j) { return j == k ? delta : (e[k] - e[j]) + delta; };
  cd w = 1;
  for (std::size_t j = 0; j + 1 < e.size(); j += 2) w *= diff(j) * std::sqrt(diff(j + 1) / diff(j));
  return w;
}

template <class F>
cd integrate(F f, double a, double b, double* err) {
  double e = 0;
  cd v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 18, 1e-12, &e);
  if (err) *err = std::max(*err, e);
  return v;
}

// Holomorphic differential numerator: sum_j c_j z^(g-1-j).
cd eval_numerator(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (const auto& x : c) acc = acc * z + x;
  return acc;
}

std::vector<cd> monomial_numerator(int g, int i) {
  std::vector<cd> c(static_cast<std::size_t>(g), cd(0));
  c[static_cast<std::size_t>(i)] = 1;
  return c;
}

std::vector<cd> normalized_numerator(const ThetaContext& ctx, int l) {
  std::vector<cd> c(static_cast<std::size_t>(ctx.g));
  for (int j = 0; j < ctx.g; ++j) c[static_cast<std::size_t>(j)] = ctx.alpha(l, j);
  return c;
}

double segment_ray_distance(cd z0, cd d, cd a, cd b) {
  auto point_ray = [&](cd p) {
    double s = std::max(0.0, std::real((p - z0) * std::conj(d)));
    return std::abs(z0 + s * d - p);
  };
  auto point_segment = [&](cd p) {
    cd ab = b - a;
    double t = std::clamp(std::real((p - a) * std::conj(ab)) / std::norm(ab), 0.0, 1.0);
    return std::abs(a + t * ab - p);
  };
  cd ab = b - a;
  double det = std::imag(std::conj(d) * ab);
  if (std::abs(det) > 1e-15) {
    // z0 + s d = a + t ab
    cd r = a - z0;
    double s = std::imag(std::conj(r) * ab) / det;
    double t = std::imag(std::conj(r) * d) / det;
    if (s >= 0 && t >= 0 && t <= 1) return 0;
  }
  return std::min({point_ray(a), point_ray(b), point_segment(z0)});
}

// Clearance of the ray z0 + s d from the cuts. A ray leaving a branch point
// ignores contact with that point itself.
double ray_clearance(const HyperellipticCurve& curve, cd z0, cd d, int start_branch) {
  const auto& e = curve.branch_points;
  double best = 1e300;
  for (std::size_t l = 0; l + 1 < e.size(); l += 2) {
    cd a = e[l], b = e[l + 1];
    if (start_branch == static_cast<int>(l) || start_branch == static_cast<int>(l) + 1) {
      cd other = start_branch == static_cast<int>(l) ? b : a;
      double s = std::max(0.0, std::real((other - z0) * std::conj(d)));
      best = std::min(best, std::abs(z0 + s * d - other));
      continue;
    }
    best = std::min(best, segment_ray_distance(z0, d, a, b));
  }
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (static_cast<int>(k) == start_branch) continue;
    double s = std::max(0.0, std::real((e[k] - z0) * std::conj(d)));
    best = std::min(best, std::abs(z0 + s * d - e[k]));
  }
  return best;
}

// variant 0: direction with the largest clearance; variant 1: best direction
// at least 60 degrees away from it.
cd choose_direction(const HyperellipticCurve& curve, cd z0, int start_branch, int variant) {
  constexpr int kDirections = 72;
  std::vector<double> score(kDirections);
  for (int k = 0; k < kDirections; ++k)
    score[static_cast<std::size_t>(k)] = ray_clearance(curve, z0, std::polar(1.0, 2 * kPi * k / kDirections), start_branch);
  int first = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
  int pick = first;
  if (variant == 1) {
    pick = -1;
    for (int k = 0; k < kDirections; ++k) {
      int sep = std::abs(k - first);
      sep = std::min(sep, kDirections - sep);
      if (sep < kDirections / 6) continue;
      if (pick < 0 || score[static_cast<std::size_t>(k)] > score[static_cast<std::size_t>(pick)]) pick = k;
    }
  }
  if (pick < 0 || score[static_cast<std::size_t>(pick)] < 1e-6)
    throw ThetaError("no path to infinity avoids the branch cuts");
  return std::polar(1.0, 2 * kPi * pick / kDirections);
}

// integral from z0 to infinity of num(z) dz / (2 w_+(z)) along z0 + s d.
cd ray_integral(const HyperellipticCurve& curve, const std::vector<cd>& num, cd z0, cd d, double* err) {
  auto f = [&](double t) -> cd {
    double s = t / (1 - t);
    cd z = z0 + s * d;
    return eval_numerator(num, z) / (2.0 * w_plus(curve, z)) * d / ((1 - t) * (1 - t));
  };
  return integrate(f, 0.0, 1.0, err);
}

// Same from a branch point, with z = e + tau^2 d to absorb the square-root singularity.
cd branch_ray_integral(const HyperellipticCurve& curve, const std::vector<cd>& num, cd e, cd d, double* err) {
  auto f = [&](double t) -> cd {
    double tau = t / (1 - t);
    cd z = e + tau * tau * d;
    return eval_numerator(num, z) / (2.0 * w_plus_near(curve, 0, tau * tau * d)) * (2 * tau) * d / ((1 - t) * (1 - t));
  };
  return integrate(f, 0.0, 1.0, err);
}

// Ellipse z = c + r cos(theta - i rho) around cut j, clear of every other cut.
cd a_cycle(const HyperellipticCurve& curve, const std::vector<cd>& num, int j, double* err) {
  const auto& e = curve.branch_points;
  cd a = e[static_cast<std::size_t>(2 * j)], b = e[static_cast<std::size_t>(2 * j + 1)];
  cd c = (a + b) / 2.0, r = (b - a) / 2.0;
  double rho = 1e300;
  for (std::size_t l = 0; l + 1 < e.size(); l += 2) {
    if (static_cast<int>(l) == 2 * j) continue;
    for (int s = 0; s <= 64; ++s) {
      cd p = e[l] + (e[l + 1] - e[l]) * (s / 64.0);
      rho = std::min(rho, std::abs(std::real(std::acosh((p - c) / r))));
    }
  }
  rho *= 0.5;
  auto trapezoid = [&](int M) {
    cd acc = 0;
    for (int k = 0; k < M; ++k) {
      cd th = 2 * kPi * k / M - kI * rho;
      cd z = c + r * std::cos(th);
      acc += eval_numerator(num, z) / (2.0 * w_plus(curve, z)) * (-r * std::sin(th));
    }
    return acc * (2 * kPi / M);
  };
  int M = 128;
  cd prev = trapezoid(M);
  while (M < (1 << 18)) {
    M *= 2;
    cd next = trapezoid(M);
    double diff = std::abs(next - prev);
    prev = next;
    if (diff < 1e-15 * std::max(1.0, std::abs(next))) {
      if (err) *err = std::max(*err, diff);
      return next;
    }
  }
  throw ThetaError("a-period quadrature did not converge");
}

// integral over the gap from e_{2l+1} to e_{2l+2}.
cd gap_integral(const HyperellipticCurve& curve, const std::vector<cd>& num, int l, double* err) {
  std::size_t ia = static_cast<std::size_t>(2 * l + 1), ib = ia + 1;
  cd a = curve.branch_points[ia], b = curve.branch_points[ib];
  cd r = (b - a) / 2.0;
  // z = (a + b)/2 + r cos(th), measured from the nearer endpoint
  auto f = [&](double th) -> cd {
    cd w, z;
    if (th < kPi / 2) {
      cd delta = -2.0 * r * std::pow(std::sin(th / 2), 2);
      z = b + delta;
      w = w_plus_near(curve, ib, delta);
    } else {
      cd delta = 2.0 * r * std::pow(std::cos(th / 2), 2);
      z = a + delta;
      w = w_plus_near(curve, ia, delta);
    }
    return eval_numerator(num, z) / (2.0 * w) * r * std::sin(th);
  };
  return integrate(f, 0.0, kPi, err);
}

std::size_t lattice_count(int g, int R) {
  std::size_t c = 1;
  for (int i = 0; i < g; ++i) c *= static_cast<std::size_t>(2 * R + 1);
  return c;
}

int lattice_radius(const ThetaContext& ctx, const CVector& u, int order) {
  double re = 0;
  for (const auto& x : u) re += std::real(x) * std::real(x);
  re = std::sqrt(re);
  for (int R = 2; R <= ctx.radius_cap; ++R) {
    double r = R + 1;
    double bound = -0.5 * ctx.decay * r * r + re * r + (order + ctx.g) * std::log(r) + ctx.g * std::log(2.0) + std::log(10.0);
    if (bound < std::log(1e-17)) return R;
  }
  throw ThetaError("lattice sum too slow; curve too degenerate");
}

void decode(std::size_t idx, int g, int R, std::vector<int>& n) {
  for (int i = g - 1; i >= 0; --i) {
    n[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(2 * R + 1)) - R;
    idx /= static_cast<std::size_t>(2 * R + 1);
  }
}

// Adds the contribution of lattice point n to sums[mask] for all masks.
void accumulate(const ThetaContext& ctx, const CVector& u, const std::vector<CVector>& dirs, const std::vector<int>& n,
                std::vector<cd>& p, std::vector<cd>& prod, std::vector<cd>& sums) {
  int g = ctx.g;
  cd ex = 0;
  for (int i = 0; i < g; ++i) {
    cd row = 0;
    for (int j = 0; j < g; ++j) row += ctx.B(i, j) * static_cast<double>(n[static_cast<std::size_t>(j)]);
    ex += static_cast<double>(n[static_cast<std::size_t>(i)]) * (0.5 * row + u[static_cast<std::size_t>(i)]);
  }
  cd term = std::exp(ex);
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    cd s = 0;
    for (int i = 0; i < g; ++i) s += static_cast<double>(n[static_cast<std::size_t>(i)]) * dirs[j][static_cast<std::size_t>(i)];
    p[j] = s;
  }
  prod[0] = 1;
  sums[0] += term;
  for (std::size_t mask = 1; mask < prod.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    prod[mask] = prod[mask & (mask - 1)] * p[low];
    sums[mask] += term * prod[mask];
  }
}

void set_partitions(int N, std::vector<int>& label, int pos, int blocks, std::vector<std::vector<int>>& out) {
  if (pos == N) {
    out.push_back(label);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    label[static_cast<std::size_t>(pos)] = b;
    set_partitions(N, label, pos + 1, std::max(blocks, b + 1), out);
  }
}

}  // namespace

HyperellipticCurve make_hyperelliptic_curve(const Poly& q) {
  int d = q.degree();
  if (d < 4 || d % 2 != 0) throw ThetaError("Q(z) must have even degree 2g+2 >= 4");
  if (q.leading() != 1) throw ThetaError("Q(z) must be monic");
  if (!is_squarefree(q)) throw ThetaError("Q(z) is not squarefree; the curve is singular");
  HyperellipticCurve c;
  c.q = q;
  c.g = d / 2 - 1;
  std::vector<cd> e = roots(q);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (std::abs(e[i] - e[j]) < 1e-8) throw ThetaError("branch points numerically indistinct");
  double best_gap = -1, best_phi = 0;
  for (int k = 0; k <= 180; ++k) {
    double phi = kPi * k / 180;
    std::vector<double> proj;
    for (const auto& x : e) proj.push_back(std::real(x * std::polar(1.0, -phi)));
    std::sort(proj.begin(), proj.end());
    double gap = 1e300;
    for (std::size_t i = 1; i < proj.size(); ++i) gap = std::min(gap, proj[i] - proj[i - 1]);
    if (gap > best_gap) {
      best_gap = gap;
      best_phi = phi;
    }
  }
  std::sort(e.begin(), e.end(), [&](cd x, cd y) {
    return std::real(x * std::polar(1.0, -best_phi)) < std::real(y * std::polar(1.0, -best_phi));
  });
  c.branch_points = e;
  return c;
}

cd w_plus(const HyperellipticCurve& curve, cd z) {
  cd w = 1;
  for (std::size_t j = 0; j + 1 < curve.branch_points.size(); j += 2) {
    cd a = curve.branch_points[j], b = curve.branch_points[j + 1];
    w *= (z - a) * std::sqrt((z - b) / (z - a));
  }
  return w;
}

ThetaContext period_matrix(const HyperellipticCurve& curve) {
  int g = curve.g;
  ThetaContext ctx;
  ctx.g = g;
  ctx.branch_points = curve.branch_points;
  ctx.a_periods = CMatrix(g, cd(0));
  ctx.b_periods = CMatrix(g, cd(0));
  double err = 0;
  for (int i = 0; i < g; ++i) {
    auto num = monomial_numerator(g, i);
    for (int j = 0; j < g; ++j) ctx.a_periods(i, j) = a_cycle(curve, num, j, &err);
    std::vector<cd> gaps;
    for (int l = 0; l < g; ++l) gaps.push_back(2.0 * gap_integral(curve, num, l, &err));
    for (int j = 0; j < g; ++j)
      for (int l = j; l < g; ++l) ctx.b_periods(i, j) += gaps[static_cast<std::size_t>(l)];
  }
  ctx.quadrature_error = err;
  if (err > 1e-10) {
    std::ostringstream os;
    os << "period quadrature error estimate " << err << " exceeds 1e-10";
    throw ThetaError(os.str());
  }
  Eigen::MatrixXcd A = to_eigen(ctx.a_periods);
  Eigen::MatrixXcd alpha = 2.0 * kPi * kI * A.inverse();
  Eigen::MatrixXcd B = (alpha * to_eigen(ctx.b_periods)).transpose();
  Eigen::MatrixXd reB = ((B + B.transpose()) / 2.0).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(reB);
  if (es.eigenvalues().minCoeff() > 0) {
    B = -B;
    ctx.flipped = true;
    es.compute(-reB);
  }
  if (es.eigenvalues().maxCoeff() >= 0) throw ThetaError("Re B is not negative definite: cycle basis orientation error");
  ctx.decay = -es.eigenvalues().maxCoeff();
  ctx.alpha = from_eigen(alpha);
  ctx.B = from_eigen(B);
  ctx.symmetry_error = (B - B.transpose()).norm() / B.norm();
  return ctx;
}

VData v_vectors(const HyperellipticCurve& curve, const ThetaContext& ctx, int kmax) {
  int d = curve.q.degree();
  std::vector<Rational> s(static_cast<std::size_t>(std::max(kmax, 0)) + 1, Rational(0));
  for (int k = 0; k <= kmax && k <= d; ++k) s[static_cast<std::size_t>(k)] = curve.q.coeff(d - k);
  VData out;
  out.r = series_inv_sqrt(TailSeries(0, s)).coeffs();
  for (int k = 0; k <= kmax; ++k) {
    CVector v(static_cast<std::size_t>(ctx.g), cd(0));
    for (int i = 0; i < ctx.g; ++i)
      for (int j = 0; j < ctx.g && j <= k; ++j) v[static_cast<std::size_t>(i)] += ctx.alpha(i, j) * out.r[static_cast<std::size_t>(k - j)].get_d();
    out.v.push_back(v);
  }
  return out;
}

double v_convention_error(const HyperellipticCurve& curve, const ThetaContext& ctx, const VData& v) {
  double radius = 1;
  for (const auto& e : curve.branch_points) radius = std::max(radius, std::abs(e));
  radius *= 2;
  const int M = 4096;
  double worst = 0;
  for (int i = 0; i < ctx.g; ++i) {
    auto num = normalized_numerator(ctx, i);
    for (std::size_t k = 0; k < v.v.size(); ++k) {
      cd acc = 0;
      for (int p = 0; p < M; ++p) {
        cd z = std::polar(radius, 2 * kPi * p / M);
        // (1 / 2 pi i) * omega * z^(k+1) dz with dz = i z dtheta
        acc += eval_numerator(num, z) / (2.0 * w_plus(curve, z)) * std::pow(z, static_cast<int>(k) + 2);
      }
      acc /= static_cast<double>(M);
      worst = std::max(worst, std::abs(acc - v.v[k][static_cast<std::size_t>(i)] / 2.0));
    }
  }
  return worst;
}

std::vector<double> lattice_coordinates(const ThetaContext& ctx, const CVector& u) {
  int g = ctx.g;
  Eigen::MatrixXd reB(g, g), imB(g, g);
  Eigen::VectorXd reu(g), imu(g);
  for (int i = 0; i < g; ++i) {
    reu(i) = std::real(u[static_cast<std::size_t>(i)]);
    imu(i) = std::imag(u[static_cast<std::size_t>(i)]);
    for (int j = 0; j < g; ++j) {
      reB(i, j) = std::real(ctx.B(i, j));
      imB(i, j) = std::imag(ctx.B(i, j));
    }
  }
  Eigen::VectorXd y = reB.partialPivLu().solve(reu);
  Eigen::VectorXd x = (imu - imB * y) / (2 * kPi);
  std::vector<double> out;
  for (int i = 0; i < g; ++i) out.push_back(x(i));
  for (int i = 0; i < g; ++i) out.push_back(y(i));
  return out;
}

CVector reduce_mod_lattice(const ThetaContext& ctx, const CVector& u) {
  int g = ctx.g;
  auto c = lattice_coordinates(ctx, u);
  for (auto& x : c) x -= std::round(x);
  CVector out(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    cd v = 2 * kPi * kI * c[static_cast<std::size_t>(i)];
    for (int j = 0; j < g; ++j) v += ctx.B(i, j) * c[static_cast<std::size_t>(g + j)];
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

std::vector<cd> directional_sums(const CVector& u, const ThetaContext& ctx, const std::vector<CVector>& dirs,
                                 Execution execution) {
  int g = ctx.g;
  if (static_cast<int>(u.size()) != g) throw std::invalid_argument("u has the wrong dimension");
  if (dirs.size() > 20) throw std::invalid_argument("too many directions");
  int R = lattice_radius(ctx, u, static_cast<int>(dirs.size()));
  std::size_t total = lattice_count(g, R);
  std::size_t masks = std::size_t{1} << dirs.size();

  if (execution == Execution::serial) {
    std::vector<cd> sums(masks, cd(0)), p(dirs.size()), prod(masks);
    std::vector<int> n(static_cast<std::size_t>(g));
    for (std::size_t idx = 0; idx < total; ++idx) {
      decode(idx, g, R, n);
      accumulate(ctx, u, dirs, n, p, prod, sums);
    }
    return sums;
  }

  // Fixed blocks combined in block order: the result does not depend on the thread count.
  constexpr std::size_t kBlock = 512;
  std::size_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<cd>> partial(blocks, std::vector<cd>(masks, cd(0)));
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (long b = 0; b < static_cast<long>(blocks); ++b) {
    std::vector<cd> p(dirs.size()), prod(masks);
    std::vector<int> n(static_cast<std::size_t>(g));
    std::size_t end = std::min(total, (static_cast<std::size_t>(b) + 1) * kBlock);
    for (std::size_t idx = static_cast<std::size_t>(b) * kBlock; idx < end; ++idx) {
      decode(idx, g, R, n);
      accumulate(ctx, u, dirs, n, p, prod, partial[static_cast<std::size_t>(b)]);
    }
  }
  std::vector<cd> sums(masks, cd(0));
  for (const auto& part : partial)
    for (std::size_t m = 0; m < masks; ++m) sums[m] += part[m];
  return sums;
}

cd theta(const CVector& u, const ThetaContext& ctx, const std::vector<int>& derivative, Execution execution) {
  std::vector<CVector> dirs;
  for (int i : derivative) {
    if (i < 0 || i >= ctx.g) throw std::out_of_range("derivative index out of range");
    CVector e(static_cast<std::size_t>(ctx.g), cd(0));
    e[static_cast<std::size_t>(i)] = 1;
    dirs.push_back(e);
  }
  return directional_sums(u, ctx, dirs, execution).back();
}

cd log_theta_directional(const CVector& u, const ThetaContext& ctx, const std::vector<CVector>& dirs, Execution execution) {
  int N = static_cast<int>(dirs.size());
  if (N < 1) throw std::invalid_argument("log theta derivative needs order >= 1");
  // Derivatives of order >= 2 are invariant under lattice shifts of u.
  CVector point = N >= 2 ? reduce_mod_lattice(ctx, u) : u;
  std::vector<cd> sums = directional_sums(point, ctx, dirs, execution);
  if (std::abs(sums[0]) < 1e-10) throw ThetaError("point on theta divisor");
  std::vector<std::vector<int>> parts;
  std::vector<int> label(static_cast<std::size_t>(N), 0);
  set_partitions(N, label, 0, 0, parts);
  cd total = 0;
  for (const auto& lab : parts) {
    int blocks = *std::max_element(lab.begin(), lab.end()) + 1;
    std::vector<std::size_t> mask(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < N; ++i) mask[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] |= std::size_t{1} << i;
    double coef = (blocks % 2 == 1 ? 1.0 : -1.0) * std::tgamma(blocks);
    cd term = coef;
    for (auto msk : mask) term *= sums[msk] / sums[0];
    total += term;
  }
  return total;
}

cd log_theta_derivative(const CVector& u, const ThetaContext& ctx, const std::vector<int>& indices, Execution execution) {
  std::vector<CVector> dirs;
  for (int i : indices) {
    if (i < 0 || i >= ctx.g) throw std::out_of_range("derivative index out of range");
    CVector e(static_cast<std::size_t>(ctx.g), cd(0));
    e[static_cast<std::size_t>(i)] = 1;
    dirs.push_back(e);
  }
  return log_theta_directional(u, ctx, dirs, execution);
}

JacobianPoint abel_u0(const HyperellipticCurve& curve, const ThetaContext& ctx, const std::vector<DivisorPoint>& divisor,
                      int path_variant) {
  int g = ctx.g;
  if (static_cast<int>(divisor.size()) != g + 1)
    throw ThetaError("expected " + std::to_string(g + 1) + " divisor points, got " + std::to_string(divisor.size()));
  double err = 0;
  cd e0 = curve.branch_points[0];
  cd d0 = choose_direction(curve, e0, 0, path_variant);
  CVector lambda(static_cast<std::size_t>(g));
  for (int l = 0; l < g; ++l) lambda[static_cast<std::size_t>(l)] = -2.0 * branch_ray_integral(curve, normalized_numerator(ctx, l), e0, d0, &err);

  CVector u(static_cast<std::size_t>(g), cd(0));
  for (const auto& p : divisor) {
    cd wp = w_plus(curve, p.z);
    double sigma = std::abs(wp - p.w) < std::abs(wp + p.w) ? 1.0 : -1.0;
    cd d = choose_direction(curve, p.z, -1, path_variant);
    for (int l = 0; l < g; ++l) {
      cd I = ray_integral(curve, normalized_numerator(ctx, l), p.z, d, &err);
      u[static_cast<std::size_t>(l)] += -sigma * (I + lambda[static_cast<std::size_t>(l)] / 2.0);
    }
  }
  if (err > 1e-9) throw ThetaError("Abel map quadrature did not converge (" + std::to_string(err) + ")");
  for (int i = 0; i < g; ++i) {
    cd varpi = (i % 2 == 0 ? kI * kPi : cd(0));
    for (int j = 0; j < g; ++j) varpi += 0.5 * ctx.B(i, j);
    u[static_cast<std::size_t>(i)] -= varpi;
  }
  JacobianPoint jp;
  jp.u0 = u;
  jp.theta_value = theta(reduce_mod_lattice(ctx, u), ctx);
  return jp;
}

ThetaReport verify_main_theorem(const MatrixPolynomial& W, const ThetaOptions& options) {
  if (W.n() != 2) throw InputError("theta verification needs a 2x2 matrix polynomial");
  const RatMatrix& lead = W.coefficient(0);
  if (lead(0, 0) != 1 || lead(1, 1) != -1)
    throw InputError("theta verification needs leading coefficient diag(1, -1)");
  int m = W.m();
  std::vector<Rational> ac(static_cast<std::size_t>(m) + 1), bc(static_cast<std::size_t>(m) + 1), cc(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    const RatMatrix& b = W.coefficient(k);
    if (b(1, 1) != -b(0, 0)) throw InputError("theta verification needs a traceless W = [[a, b], [c, -a]]");
    ac[static_cast<std::size_t>(m - k)] = b(0, 0);
    bc[static_cast<std::size_t>(m - k)] = b(0, 1);
    cc[static_cast<std::size_t>(m - k)] = b(1, 0);
  }
  if (m < 2) throw InputError("theta verification needs genus g = m - 1 >= 1");
  if (options.kmax < 0) throw InputError("kmax must be nonnegative");
  Poly a(ac), b(bc), c(cc);

  ThetaReport rep;
  rep.tol = options.tol;
  HyperellipticCurve curve = make_hyperelliptic_curve(hyperelliptic_q(a, b, c));
  ThetaContext ctx = period_matrix(curve);
  int g = ctx.g;
  rep.g = g;
  rep.symmetry_error = ctx.symmetry_error;
  rep.quadrature_error = ctx.quadrature_error;
  rep.b_negative_definite = true;

  int kmax3 = options.kmax, kmax4 = options.kmax - 1;
  VData vd = v_vectors(curve, ctx, kmax3);
  rep.v_convention_error = v_convention_error(curve, ctx, vd);

  std::vector<DivisorPoint> divisor = pole_divisor(W);
  JacobianPoint jp = abel_u0(curve, ctx, divisor, 0);
  JacobianPoint jp1 = abel_u0(curve, ctx, divisor, 1);
  rep.u0 = jp.u0;
  rep.theta_u0 = jp.theta_value;
  {
    CVector diff(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) diff[static_cast<std::size_t>(i)] = jp.u0[static_cast<std::size_t>(i)] - jp1.u0[static_cast<std::size_t>(i)];
    for (const auto& x : reduce_mod_lattice(ctx, diff)) rep.path_discrepancy = std::max(rep.path_discrepancy, std::abs(x));
  }

  // Exact side.
  long T = std::max(correlator_truncation(3, kmax3), kmax4 >= 0 ? correlator_truncation(4, kmax4) : 0L) + 2;
  ProjectorSet proj = compute_projectors(W, T);
  CorrelatorOptions copt;
  copt.execution = options.execution;
  struct Target {
    IndexTuple k;
    Rational f;
  };
  std::vector<Target> targets;
  auto add_targets = [&](int N, int kmax) {
    if (kmax < 0) return;
    CorrelatorTable table = correlator_table(proj, N, kmax, copt);
    IndexTuple k(static_cast<std::size_t>(N), 0);
    while (true) {
      targets.push_back({k, difference_correlator(table, k)});
      int pos = N - 1;
      while (pos >= 0 && k[static_cast<std::size_t>(pos)] == kmax) --pos;
      if (pos < 0) break;
      int v = k[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < N; ++i) k[static_cast<std::size_t>(i)] = v;
    }
  };
  add_targets(3, kmax3);
  add_targets(4, kmax4);

  auto evaluate = [&](const CVector& u, const Target& t) {
    std::vector<CVector> dirs;
    for (int k : t.k) dirs.push_back(vd.v[static_cast<std::size_t>(k)]);
    IdentityCheck chk;
    chk.k = t.k;
    chk.f = t.f;
    chk.t = log_theta_directional(u, ctx, dirs, options.execution);
    double sign = t.k.size() % 2 == 0 ? 1.0 : -1.0;
    double f = t.f.get_d();
    chk.abs_err = std::abs(sign * chk.t - f);
    chk.rel_err = chk.abs_err / std::max(1.0, std::abs(f));
    chk.pass = chk.abs_err < options.tol * std::max(1.0, std::abs(f)) && std::abs(std::imag(chk.t)) < options.tol;
    return chk;
  };

  std::vector<std::vector<IdentityCheck>> per_shift;
  std::vector<CVector> shifted;
  for (int mask = 0; mask < (1 << (2 * g)); ++mask) {
    ShiftRow row;
    CVector u = jp.u0;
    for (int i = 0; i < g; ++i) {
      row.m.push_back((mask >> i) & 1);
      row.n.push_back((mask >> (g + i)) & 1);
    }
    for (int i = 0; i < g; ++i) {
      u[static_cast<std::size_t>(i)] += kI * kPi * static_cast<double>(row.m[static_cast<std::size_t>(i)]);
      for (int j = 0; j < g; ++j) u[static_cast<std::size_t>(i)] += 0.5 * ctx.B(i, j) * static_cast<double>(row.n[static_cast<std::size_t>(j)]);
    }
    std::vector<IdentityCheck> checks;
    for (const auto& t : targets) {
      try {
        checks.push_back(evaluate(u, t));
      } catch (const ThetaError&) {
        IdentityCheck bad;
        bad.k = t.k;
        bad.f = t.f;
        bad.abs_err = bad.rel_err = std::numeric_limits<double>::infinity();
        checks.push_back(bad);
      }
    }
    row.anchor_err = checks.front().rel_err;
    for (const auto& ch : checks) row.worst_err = std::max(row.worst_err, ch.rel_err);
    rep.shifts.push_back(row);
    per_shift.push_back(std::move(checks));
    shifted.push_back(u);
  }
  std::size_t best = 0;
  for (std::size_t s = 1; s < rep.shifts.size(); ++s)
    if (rep.shifts[s].anchor_err < rep.shifts[best].anchor_err) best = s;
  rep.shift_used = best;
  rep.identities = per_shift[best];

  // Intermediate checks at the chosen point.
  CVector u = reduce_mod_lattice(ctx, shifted[best]);
  cd th = theta(u, ctx, {}, options.execution);
  for (int j = 0; j < g; ++j) {
    CVector ub = u, ui = u;
    for (int i = 0; i < g; ++i) ub[static_cast<std::size_t>(i)] += ctx.B(i, j);
    ui[static_cast<std::size_t>(j)] += 2 * kPi * kI;
    cd expect = std::exp(-0.5 * ctx.B(j, j) - u[static_cast<std::size_t>(j)]) * th;
    rep.quasi_periodicity_error = std::max(rep.quasi_periodicity_error, std::abs(theta(ub, ctx, {}, options.execution) - expect) / std::abs(expect));
    rep.integer_period_error = std::max(rep.integer_period_error, std::abs(theta(ui, ctx, {}, options.execution) - th) / std::abs(th));
  }
  CVector neg(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
  rep.evenness_error = std::abs(theta(neg, ctx, {}, options.execution) - th) / std::abs(th);

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) rep.failures.push_back(what);
  };
  require(rep.symmetry_error < 1e-8, "B not symmetric within 1e-8");
  require(rep.quasi_periodicity_error < 1e-10, "quasi-periodicity error above 1e-10");
  require(rep.integer_period_error < 1e-12, "2 pi i periodicity error above 1e-12");
  require(rep.evenness_error < 1e-10, "theta evenness error above 1e-10");
  require(rep.v_convention_error < 1e-8, "V convention check above 1e-8");
  require(rep.path_discrepancy < 1e-8, "u0 depends on the integration path beyond 1e-8");
  require(std::abs(jp.theta_value) > 1e-10, "theta(u0) vanishes: divisor looks special");
  for (const auto& ch : rep.identities) {
    if (!ch.pass) {
      std::ostringstream os;
      os << "identity N=" << ch.k.size() << " k=(";
      for (std::size_t i = 0; i < ch.k.size(); ++i) os << (i ? "," : "") << ch.k[i];
      os << ") off by " << ch.abs_err;
      rep.failures.push_back(os.str());
    }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace spectau
