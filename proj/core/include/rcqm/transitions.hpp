#pragma once

#include "rcqm/clifford.hpp"
#include "rcqm/kmatrix.hpp"
#include "rcqm/report.hpp"

namespace rcqm {

// Momentum-dependent unitary pair linking the canonical-field and covariant
// representations for N in {4, 8, 12, 16}:
//   to_covariant(k)  = (-Gamma.k + omega + m) / sqrt(2 omega (omega+m))
//   to_canonical(k)  = (+Gamma.k + omega + m) / sqrt(2 omega (omega+m))
// Inverses and adjoints of each other pointwise. In the Vminus/Vplus naming
// of the transition formula, Vminus = to_covariant and Vplus = to_canonical.
struct TransitionPair {
  int n = 0;
  double m = 0.0;
  KMatrixFn to_covariant;  // Vminus: canonical-field -> covariant
  KMatrixFn to_canonical;  // Vplus:  covariant -> canonical-field
};

TransitionPair fw_transition(int n, double m);

// Covariant Hamiltonian symbol H(k) = Gamma^0 (Gamma.k + m) on e^{+ik.x}.
KMatrixFn dirac_hamiltonian(int n, double m);

// W = Vplus v in the composed-transition sense: maps quantum-mechanical
// states straight to the covariant representation at fixed k. W^{-1} = v
// composed with the inverse matrix; both returned.
struct WOperator {
  RLinearOp w;
  RLinearOp w_inv;
};
WOperator w_operator(int n, const KVec& k, double m);

// Canonical-field spin: block-diagonal diag(s, s) for a paired
// particle-antiparticle config. Equals the v-conjugation of the
// quantum-mechanical multiplet spin taken in anti-Hermitian form.
SpinTriple fw_spin(const SpinConfig& config);

// s_D^j(k) = to_covariant(k) s_fw^j to_canonical(k); satisfies SU(2)
// pointwise and commutes with H(k).
std::array<KMatrixFn, 3> dirac_spin_computed(int n, const SpinConfig& config,
                                             double m);

// Literal transcriptions of the covariant spin tables printed for the
// three representations below. The conjugation construction above is the
// oracle; disagreements are reported as errata, never silently corrected.
enum class PaperSpinTable {
  s8_vector,   // N=8, spins (1,0,1,0): all three components
  s8_spin32,   // N=8, spins (3/2,3/2): all three components
  s16_third,   // N=16, spins (2,1,2,1): third component only
};
std::vector<Mat> dirac_spin_paper(PaperSpinTable table, const KVec& k, double m);

// Element-by-element diff of the transcribed tables against the conjugation
// construction at sampled k.
VerificationReport dirac_spin_errata(PaperSpinTable table, double m, int samples,
                                     double tol, std::uint64_t seed = 3);

// Nonlocal 4-component covariant spin
//   s_D = s - gamma x grad / (2 omega) + grad x (s x grad) / (omega(omega+m))
// realized in momentum space with grad -> ik.
std::array<Mat, 3> dirac_spin_nonlocal4(const KVec& k, double m);

}  // namespace rcqm
