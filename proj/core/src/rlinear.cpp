#include "rcqm/rlinear.hpp"

#include <stdexcept>

namespace rcqm {

RLinearOp::RLinearOp(Mat linear, Mat antilinear)
    : L_(std::move(linear)), A_(std::move(antilinear)) {
  if (L_.rows() != L_.cols() || A_.rows() != A_.cols() || L_.rows() != A_.rows())
    throw std::invalid_argument("RLinearOp: parts must be square and same size");
}

RLinearOp RLinearOp::identity(int n) {
  return RLinearOp(Mat::Identity(n, n), Mat::Zero(n, n));
}

RLinearOp RLinearOp::from_linear(const Mat& L) {
  return RLinearOp(L, Mat::Zero(L.rows(), L.cols()));
}

RLinearOp RLinearOp::conjugation(int n) {
  return RLinearOp(Mat::Zero(n, n), Mat::Identity(n, n));
}

Vec RLinearOp::apply(const Vec& f) const {
  if (f.size() != L_.rows()) throw std::invalid_argument("RLinearOp::apply: size mismatch");
  return L_ * f + A_ * f.conjugate();
}

RLinearOp RLinearOp::compose(const RLinearOp& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("RLinearOp::compose: size mismatch");
  return RLinearOp(L_ * o.L_ + A_ * o.A_.conjugate(),
                   L_ * o.A_ + A_ * o.L_.conjugate());
}

RLinearOp RLinearOp::adjoint() const {
  return RLinearOp(L_.adjoint(), A_.transpose());
}

bool RLinearOp::is_linear(double tol) const {
  return A_.cwiseAbs().maxCoeff() <= tol;
}

double RLinearOp::distance_to(const RLinearOp& o) const {
  return std::max((L_ - o.L_).cwiseAbs().maxCoeff(), (A_ - o.A_).cwiseAbs().maxCoeff());
}

RLinearOp v_operator(int n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("v_operator: N must be even");
  Mat L = Mat::Zero(n, n), A = Mat::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) L(i, i) = 1.0;
  for (int i = n / 2; i < n; ++i) A(i, i) = 1.0;
  return RLinearOp(L, A);
}

double antihermiticity_residual(const RLinearOp& q) {
  const double rl = (q.linear().adjoint() + q.linear()).cwiseAbs().maxCoeff();
  const double ra = (q.antilinear().conjugate().transpose() + q.antilinear())
                        .cwiseAbs()
                        .maxCoeff();
  return std::max(rl, ra);
}

bool is_antihermitian(const RLinearOp& q, double tol) {
  if (tol <= 0) throw std::invalid_argument("is_antihermitian: tol must be positive");
  return antihermiticity_residual(q) < tol;
}

RLinearOp conjugate_generator(const RLinearOp& v, const RLinearOp& q,
                              bool assert_antihermitian, double tol) {
  if (assert_antihermitian && !is_antihermitian(q, tol))
    throw std::invalid_argument(
        "conjugate_generator: operator is not anti-Hermitian (residual " +
        std::to_string(antihermiticity_residual(q)) +
        "); pass assert_antihermitian=false to override");
  return v.compose(q).compose(v);
}

}  // namespace rcqm
