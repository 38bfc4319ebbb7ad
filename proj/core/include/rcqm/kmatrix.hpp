#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rcqm/spin_algebra.hpp"

namespace rcqm {

using KVec = Eigen::Vector3d;

// Forward-mode dual number carrying all three momentum partials at once.
struct Dual3 {
  double v = 0.0;
  std::array<double, 3> d{{0.0, 0.0, 0.0}};

  Dual3() = default;
  Dual3(double value) : v(value) {}
  Dual3(double value, int seed) : v(value) { d[seed] = 1.0; }
};

inline Dual3 operator+(const Dual3& a, const Dual3& b) {
  Dual3 r(a.v + b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
inline Dual3 operator-(const Dual3& a, const Dual3& b) {
  Dual3 r(a.v - b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
inline Dual3 operator-(const Dual3& a) {
  Dual3 r(-a.v);
  for (int i = 0; i < 3; ++i) r.d[i] = -a.d[i];
  return r;
}
inline Dual3 operator*(const Dual3& a, const Dual3& b) {
  Dual3 r(a.v * b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
inline Dual3 operator/(const Dual3& a, const Dual3& b) {
  Dual3 r(a.v / b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / (b.v * b.v);
  return r;
}
inline Dual3 sqrt(const Dual3& a) {
  const double s = std::sqrt(a.v);
  Dual3 r(s);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] / (2.0 * s);
  return r;
}
inline double value_of(double x) { return x; }
inline double value_of(const Dual3& x) { return x.v; }

// Complex number over a generic real scalar (double or Dual3). std::complex
// is only specified for floating-point types, so dual arithmetic gets its
// own minimal type.
template <class T>
struct Cplx {
  T re{}, im{};
  Cplx() = default;
  Cplx(T r) : re(std::move(r)) {}
  Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  template <class U = T, class = std::enable_if_t<!std::is_same_v<U, double>>>
  Cplx(double r) : re(T(r)) {}
  Cplx(const std::complex<double>& z) : re(T(z.real())), im(T(z.imag())) {}
};

template <class T>
Cplx<T> operator+(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class T>
Cplx<T> operator-(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class T>
Cplx<T> operator-(const Cplx<T>& a) {
  return {-a.re, -a.im};
}
template <class T>
Cplx<T> operator*(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T>
Cplx<T> operator/(const Cplx<T>& a, const T& s) {
  return {a.re / s, a.im / s};
}
template <class T>
Cplx<T> conj(const Cplx<T>& a) {
  return {a.re, -a.im};
}

// Dense square matrix with Cplx<T> entries; just enough algebra for the
// momentum-space operator builders.
template <class T>
class SmallMat {
 public:
  SmallMat() = default;
  explicit SmallMat(int n) : n_(n), a_(n * n) {}
  static SmallMat zero(int n) { return SmallMat(n); }
  static SmallMat identity(int n) {
    SmallMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Cplx<T>(1.0);
    return m;
  }
  static SmallMat lift(const Mat& src) {
    SmallMat m(static_cast<int>(src.rows()));
    for (int i = 0; i < m.n_; ++i)
      for (int j = 0; j < m.n_; ++j) m(i, j) = Cplx<T>(src(i, j));
    return m;
  }

  int dim() const { return n_; }
  Cplx<T>& operator()(int i, int j) { return a_[i * n_ + j]; }
  const Cplx<T>& operator()(int i, int j) const { return a_[i * n_ + j]; }

  SmallMat operator+(const SmallMat& o) const {
    SmallMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  SmallMat operator-(const SmallMat& o) const {
    SmallMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  SmallMat operator*(const SmallMat& o) const {
    SmallMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Cplx<T>& aik = (*this)(i, k);
        for (int j = 0; j < n_; ++j) r(i, j) = r(i, j) + aik * o(k, j);
      }
    return r;
  }
  SmallMat scaled(const Cplx<T>& s) const {
    SmallMat r(n_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

 private:
  int n_ = 0;
  std::vector<Cplx<T>> a_;
};

inline Mat to_eigen(const SmallMat<double>& m) {
  Mat out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      out(i, j) = std::complex<double>(m(i, j).re, m(i, j).im);
  return out;
}

// Value plus the three momentum partial derivatives of a matrix function.
struct KJet {
  Mat value;
  std::array<Mat, 3> d;
};

inline KJet to_jet(const SmallMat<Dual3>& m) {
  KJet out;
  const int n = m.dim();
  out.value.resize(n, n);
  for (auto& dm : out.d) dm.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.value(i, j) = {m(i, j).re.v, m(i, j).im.v};
      for (int l = 0; l < 3; ++l)
        out.d[l](i, j) = {m(i, j).re.d[l], m(i, j).im.d[l]};
    }
  return out;
}

using std::sqrt;

template <class T>
T omega(const std::array<T, 3>& k, double m) {
  return sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + T(m) * T(m));
}
inline double omega(const KVec& k, double m) { return std::sqrt(k.squaredNorm() + m * m); }

// Smooth map (k, m) -> N x N complex matrix, evaluable on dual numbers so
// the commutator engine can take exact momentum derivatives.
class KMatrixFn {
 public:
  KMatrixFn() = default;

  template <class F>
  static KMatrixFn make(int n, double m, F builder) {
    KMatrixFn fn;
    fn.n_ = n;
    fn.m_ = m;
    fn.eval_ = [builder](const KVec& k, double mass) {
      const std::array<double, 3> kk{k[0], k[1], k[2]};
      return to_eigen(builder(kk, mass));
    };
    fn.jet_ = [builder](const KVec& k, double mass) {
      const std::array<Dual3, 3> kk{Dual3(k[0], 0), Dual3(k[1], 1), Dual3(k[2], 2)};
      return to_jet(builder(kk, mass));
    };
    return fn;
  }

  static KMatrixFn constant(const Mat& value, double m = 0.0);

  Mat operator()(const KVec& k) const { return eval_(k, m_); }
  Mat operator()(const KVec& k, double m) const { return eval_(k, m); }
  KJet jet(const KVec& k) const { return jet_(k, m_); }
  KJet jet(const KVec& k, double m) const { return jet_(k, m); }
  int dim() const { return n_; }
  double mass() const { return m_; }
  bool valid() const { return static_cast<bool>(eval_); }

 private:
  int n_ = 0;
  double m_ = 0.0;
  std::function<Mat(const KVec&, double)> eval_;
  std::function<KJet(const KVec&, double)> jet_;
};

// Analytic momentum-space test function: Gaussian envelope times an affine
// polynomial times a fixed amplitude vector. Gradient and Hessian are closed
// form and serve as the independent oracle for the dual-number machinery.
struct TestPacket {
  KVec center = KVec::Zero();
  double sigma = 1.0;
  std::array<double, 3> poly{{0.0, 0.0, 0.0}};  // 1 + sum_j poly_j k_j
  Vec amplitude;

  std::complex<double> scalar(const KVec& k) const;
  std::array<std::complex<double>, 3> scalar_grad(const KVec& k) const;
  // Hessian d^2/dk_l dk_n of the scalar part
  std::array<std::array<std::complex<double>, 3>, 3> scalar_hess(const KVec& k) const;

  Vec value(const KVec& k) const { return scalar(k) * amplitude; }
};

}  // namespace rcqm
