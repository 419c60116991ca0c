#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spectau {

// Dense n x n matrix over any ring-like T (Rational, Poly, complex).
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, const T& fill = T()) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

  static SquareMatrix identity(int n, const T& one, const T& zero) {
    SquareMatrix m(n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int size() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  template <class S>
  SquareMatrix& scale(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check(b);
    SquareMatrix c(a.n_, T());
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  T trace() const {
    T t = T();
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  void check(const SquareMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  }
  int n_ = 0;
  std::vector<T> a_;
};

}  // namespace spectau
