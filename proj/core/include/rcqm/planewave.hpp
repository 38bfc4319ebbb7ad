#pragma once

#include "rcqm/transitions.hpp"

namespace rcqm {

// Standard basis columns d_1..d_N.
std::vector<Vec> cartesian_orts(int n);

// Plane-wave spinor basis for N in {4, 8, 12, 16}: negative-frequency family
// (first N/2, rides e^{-i omega t + ik.x}) and positive-frequency family
// (last N/2, rides e^{+i omega t - ik.x}). Constructed by applying the
// transition matrices to the Cartesian orts; the printed component tables
// are reproduced by that construction.
struct SpinorBasis {
  int n = 0;
  KVec k;
  double m = 0.0;
  std::vector<Vec> vectors;  // N spinors
};
SpinorBasis dirac_spinors(int n, const KVec& k, double m);

// Orthonormality, completeness, and the normalization identity
// (omega+m)^2 + k^2 = 2 omega (omega+m).
VerificationReport check_spinor_basis(const SpinorBasis& basis, double tol);

// Eigenvalue tables: applies the representation's s3 (or the covariant
// s3_D) to the table's eigenvectors and reports the worst residual.
// rep ids:
//   rcqm singlets:  "rcqm:1/2" "rcqm:1" "rcqm:3/2" "rcqm:2"
//   rcqm multiplets: "rcqm:<config>" for any config string
//   canonical field: "fw:<config>"
//   covariant:      "dirac4" "dirac8_vector" "dirac8_spin32" "dirac12" "dirac16"
//   charge sign:    "charge:<config>"
VerificationReport spin_eigen_suite(const std::string& rep_id, double tol,
                                    double m = 1.0, std::uint64_t seed = 4);
std::vector<std::string> spin_eigen_rep_ids();

// Diagonalizes s.k/|k|; the eigenvalues must be {s, s-1, ..., -s} per
// irreducible block.
VerificationReport helicity_check(const SpinTriple& S, const SpinConfig& config,
                                  const KVec& k, double tol);

}  // namespace rcqm
