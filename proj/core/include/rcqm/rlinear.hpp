#pragma once

#include <Eigen/Dense>

#include "rcqm/spin_algebra.hpp"

namespace rcqm {

// Real-linear operator f -> L f + A conj(f). Composition law:
//   (L1,A1)(L2,A2) = (L1 L2 + A1 conj(A2), L1 A2 + A1 conj(L2)).
// Needed because the canonical<->quantum-mechanical transition operators
// contain the complex-conjugation operator C.
class RLinearOp {
 public:
  RLinearOp() = default;
  RLinearOp(Mat linear, Mat antilinear);

  static RLinearOp identity(int n);
  static RLinearOp from_linear(const Mat& L);
  static RLinearOp conjugation(int n);  // f -> conj(f)

  const Mat& linear() const { return L_; }
  const Mat& antilinear() const { return A_; }
  int dim() const { return static_cast<int>(L_.rows()); }

  Vec apply(const Vec& f) const;
  RLinearOp compose(const RLinearOp& other) const;  // this after other
  RLinearOp operator*(const RLinearOp& other) const { return compose(other); }

  // Adjoint convention (L,A) -> (L^dag, A^T), used by the anti-Hermiticity
  // test below.
  RLinearOp adjoint() const;
  bool is_linear(double tol = 0.0) const;
  double distance_to(const RLinearOp& other) const;

 private:
  Mat L_, A_;
};

// The involution v = diag(I_{N/2}, C I_{N/2}); self-inverse, self-adjoint.
RLinearOp v_operator(int n);

// True iff L^dag = -L and conj(A)^T = -A.
bool is_antihermitian(const RLinearOp& q, double tol);
double antihermiticity_residual(const RLinearOp& q);

// v q v. When assert_antihermitian is set, rejects q that fails the
// anti-Hermiticity test: the conjugation rule between representations holds
// only for prime (anti-Hermitian) generators.
RLinearOp conjugate_generator(const RLinearOp& v, const RLinearOp& q,
                              bool assert_antihermitian = true,
                              double tol = 1e-12);

}  // namespace rcqm
