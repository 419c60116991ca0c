#include "spectau/series.hpp"

#include <algorithm>
#include <string>

namespace spectau {

TailSeries::TailSeries(long lead, std::vector<Rational> coeffs) : lead_(lead), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("TailSeries needs at least one known coefficient");
}

TailSeries TailSeries::from_poly(const Poly& p, long floor) {
  long lead = std::max<long>(p.degree(), floor);
  std::vector<Rational> c(static_cast<std::size_t>(lead - floor) + 1, Rational(0));
  for (long e = lead; e >= floor; --e)
    if (e >= 0) c[static_cast<std::size_t>(lead - e)] = p.coeff(static_cast<int>(e));
  return TailSeries(lead, std::move(c));
}

TailSeries TailSeries::constant(const Rational& c, long order) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
  v[0] = c;
  return TailSeries(0, std::move(v));
}

Rational TailSeries::at(long e) const {
  if (e > lead_) return 0;
  if (e < floor())
    throw TruncationError("coefficient of z^" + std::to_string(e) + " is below the trusted range (floor z^" +
                          std::to_string(floor()) + ")");
  return c_[static_cast<std::size_t>(lead_ - e)];
}

TailSeries TailSeries::truncated(long order) const {
  if (order > this->order()) throw TruncationError("cannot extend a truncated series");
  return TailSeries(lead_, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

TailSeries TailSeries::normalized() const {
  std::size_t k = 0;
  while (k + 1 < c_.size() && is_zero(c_[k])) ++k;
  return TailSeries(lead_ - static_cast<long>(k), std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

TailSeries TailSeries::shifted(long k) const { return TailSeries(lead_ + k, c_); }

TailSeries TailSeries::operator-() const {
  TailSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {

TailSeries add_sub(const TailSeries& a, const TailSeries& b, bool subtract) {
  long lead = std::max(a.lead(), b.lead());
  long floor = std::max(a.floor(), b.floor());
  std::vector<Rational> c(static_cast<std::size_t>(lead - floor) + 1);
  for (long e = lead; e >= floor; --e) {
    Rational v = a.at(e);
    if (subtract)
      v -= b.at(e);
    else
      v += b.at(e);
    c[static_cast<std::size_t>(lead - e)] = v;
  }
  return TailSeries(lead, std::move(c));
}

}  // namespace

TailSeries operator+(const TailSeries& a, const TailSeries& b) { return add_sub(a, b, false); }
TailSeries operator-(const TailSeries& a, const TailSeries& b) { return add_sub(a, b, true); }

TailSeries operator*(const TailSeries& a, const TailSeries& b) {
  long K = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(K) + 1, Rational(0));
  for (long i = 0; i <= K; ++i) {
    const Rational& ai = a.c_[static_cast<std::size_t>(i)];
    if (is_zero(ai)) continue;
    for (long j = 0; i + j <= K; ++j) c[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
  }
  return TailSeries(a.lead_ + b.lead_, std::move(c));
}

TailSeries operator*(const TailSeries& a, const Rational& s) {
  TailSeries r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

TailSeries series_invert(const TailSeries& s) {
  const auto& a = s.coeffs();
  if (is_zero(a[0])) throw std::domain_error("not invertible as a Laurent series");
  long K = s.order();
  std::vector<Rational> b(static_cast<std::size_t>(K) + 1, Rational(0));
  Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (long k = 1; k <= K; ++k) {
    Rational acc = 0;
    for (long i = 1; i <= k; ++i) acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return TailSeries(-s.lead(), std::move(b));
}

TailSeries series_inv_sqrt(const TailSeries& s) {
  if (s.lead() != 0 || s.coeffs()[0] != 1)
    throw std::domain_error("inverse square root needs leading term exactly 1 at z^0");
  const auto& a = s.coeffs();
  long K = s.order();
  std::vector<Rational> t(static_cast<std::size_t>(K) + 1, Rational(0));
  t[0] = 1;
  for (long k = 1; k <= K; ++k) {
    Rational acc = a[static_cast<std::size_t>(k)];
    for (long i = 1; i < k; ++i) acc -= t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(k - i)];
    t[static_cast<std::size_t>(k)] = acc / 2;
  }
  return series_invert(TailSeries(0, std::move(t)));
}

MatrixTailSeries::MatrixTailSeries(int n, long lead, std::vector<RatMatrix> coeffs)
    : n_(n), lead_(lead), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("MatrixTailSeries needs at least one known coefficient");
  for (const auto& m : c_)
    if (m.size() != n) throw std::invalid_argument("MatrixTailSeries coefficient size mismatch");
}

RatMatrix MatrixTailSeries::at(long e) const {
  if (e > lead_) return RatMatrix(n_, Rational(0));
  if (e < floor())
    throw TruncationError("matrix coefficient of z^" + std::to_string(e) + " is below the trusted range (floor z^" +
                          std::to_string(floor()) + ")");
  return c_[static_cast<std::size_t>(lead_ - e)];
}

TailSeries MatrixTailSeries::entry(int i, int j) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& m : c_) v.push_back(m(i, j));
  return TailSeries(lead_, std::move(v));
}

TailSeries MatrixTailSeries::trace() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& m : c_) v.push_back(m.trace());
  return TailSeries(lead_, std::move(v));
}

MatrixTailSeries MatrixTailSeries::truncated(long order) const {
  if (order > this->order()) throw TruncationError("cannot extend a truncated series");
  return MatrixTailSeries(n_, lead_, std::vector<RatMatrix>(c_.begin(), c_.begin() + order + 1));
}

namespace {

MatrixTailSeries madd_sub(const MatrixTailSeries& a, const MatrixTailSeries& b, bool subtract) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix series size mismatch");
  long lead = std::max(a.lead(), b.lead());
  long floor = std::max(a.floor(), b.floor());
  std::vector<RatMatrix> c;
  c.reserve(static_cast<std::size_t>(lead - floor) + 1);
  for (long e = lead; e >= floor; --e) {
    RatMatrix v = a.at(e);
    if (subtract)
      v -= b.at(e);
    else
      v += b.at(e);
    c.push_back(std::move(v));
  }
  return MatrixTailSeries(a.size(), lead, std::move(c));
}

}  // namespace

MatrixTailSeries operator+(const MatrixTailSeries& a, const MatrixTailSeries& b) { return madd_sub(a, b, false); }
MatrixTailSeries operator-(const MatrixTailSeries& a, const MatrixTailSeries& b) { return madd_sub(a, b, true); }

MatrixTailSeries operator*(const MatrixTailSeries& a, const MatrixTailSeries& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix series size mismatch");
  long K = std::min(a.order(), b.order());
  std::vector<RatMatrix> c(static_cast<std::size_t>(K) + 1, RatMatrix(a.n_, Rational(0)));
  for (long i = 0; i <= K; ++i)
    for (long j = 0; i + j <= K; ++j) c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  return MatrixTailSeries(a.n_, a.lead_ + b.lead_, std::move(c));
}

MatrixTailSeries operator*(const TailSeries& s, const MatrixTailSeries& a) {
  long K = std::min(s.order(), a.order());
  std::vector<RatMatrix> c(static_cast<std::size_t>(K) + 1, RatMatrix(a.n_, Rational(0)));
  const auto& sc = s.coeffs();
  for (long i = 0; i <= K; ++i) {
    if (is_zero(sc[static_cast<std::size_t>(i)])) continue;
    for (long j = 0; i + j <= K; ++j) {
      RatMatrix t = a.c_[static_cast<std::size_t>(j)];
      t.scale(sc[static_cast<std::size_t>(i)]);
      c[static_cast<std::size_t>(i + j)] += t;
    }
  }
  return MatrixTailSeries(a.n_, s.lead() + a.lead_, std::move(c));
}

MatrixTailSeries matrix_series_from_poly(const PolyMatrix& p, long floor) {
  int n = p.size();
  int deg = -1;
  for (const auto& e : p.data()) deg = std::max(deg, e.degree());
  long lead = std::max<long>(deg, floor);
  std::vector<RatMatrix> c;
  for (long e = lead; e >= floor; --e) {
    RatMatrix m(n, Rational(0));
    if (e >= 0)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = p(i, j).coeff(static_cast<int>(e));
    c.push_back(std::move(m));
  }
  return MatrixTailSeries(n, lead, std::move(c));
}

}  // namespace spectau
