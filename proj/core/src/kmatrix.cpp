#include "rcqm/kmatrix.hpp"

namespace rcqm {

KMatrixFn KMatrixFn::constant(const Mat& value, double m) {
  KMatrixFn fn;
  fn.n_ = static_cast<int>(value.rows());
  fn.m_ = m;
  fn.eval_ = [value](const KVec&, double) { return value; };
  fn.jet_ = [value](const KVec&, double) {
    KJet j;
    j.value = value;
    for (auto& d : j.d) d = Mat::Zero(value.rows(), value.cols());
    return j;
  };
  return fn;
}

std::complex<double> TestPacket::scalar(const KVec& k) const {
  const KVec q = k - center;
  const double g = std::exp(-q.squaredNorm() / (2.0 * sigma * sigma));
  double p = 1.0;
  for (int j = 0; j < 3; ++j) p += poly[j] * k[j];
  return g * p;
}

std::array<std::complex<double>, 3> TestPacket::scalar_grad(const KVec& k) const {
  const KVec q = k - center;
  const double s2 = sigma * sigma;
  const double g = std::exp(-q.squaredNorm() / (2.0 * s2));
  double p = 1.0;
  for (int j = 0; j < 3; ++j) p += poly[j] * k[j];
  std::array<std::complex<double>, 3> out;
  for (int l = 0; l < 3; ++l) out[l] = g * (poly[l] - q[l] / s2 * p);
  return out;
}

std::array<std::array<std::complex<double>, 3>, 3> TestPacket::scalar_hess(
    const KVec& k) const {
  const KVec q = k - center;
  const double s2 = sigma * sigma;
  const double g = std::exp(-q.squaredNorm() / (2.0 * s2));
  double p = 1.0;
  for (int j = 0; j < 3; ++j) p += poly[j] * k[j];
  std::array<std::array<std::complex<double>, 3>, 3> h;
  for (int l = 0; l < 3; ++l)
    for (int n = 0; n < 3; ++n) {
      double v = -q[l] / s2 * poly[n] - q[n] / s2 * poly[l] +
                 (q[l] * q[n] / (s2 * s2)) * p;
      if (l == n) v -= p / s2;
      h[l][n] = g * v;
    }
  return h;
}

}  // namespace rcqm
