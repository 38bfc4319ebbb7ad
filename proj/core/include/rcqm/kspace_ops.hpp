#pragma once

#include <optional>
#include <random>

#include "rcqm/clifford.hpp"
#include "rcqm/kmatrix.hpp"
#include "rcqm/transitions.hpp"

namespace rcqm {

// Matrix-coefficient first-order operator in the momentum variable:
//   (A psi)(k) = c0(k) psi(k) + sum_l c[l](k) d psi / dk_l.
// k is the wavevector of the e^{+i k.x} Fourier kernel; the generators are
// assembled in the covariant lower-index normal form, where the spatial
// translation symbol is -k_l and the position operator is -i d/dk_l.
struct FirstOrderKOperator {
  KMatrixFn c0;
  std::array<KMatrixFn, 3> c;
  double t = 0.0;  // explicit time parameter (enters boosts)
  int dim() const { return c0.dim(); }
};

// Coefficients of an operator evaluated at one sample point.
struct FirstOrderAt {
  Mat c0;
  std::array<Mat, 3> c;
};

FirstOrderAt eval_at(const FirstOrderKOperator& op, const KVec& k);

// Exact symbol-level commutator evaluated at a sample point. Coefficient
// derivatives come from dual-number differentiation of the evaluators. The
// symmetric second-order part must cancel; its magnitude is returned so
// callers can assert the cancellation.
struct CommutatorAt {
  FirstOrderAt value;
  double second_order_residual = 0.0;
};
CommutatorAt commutator_at(const FirstOrderKOperator& a,
                           const FirstOrderKOperator& b, const KVec& k);

// s-breve: s_{ln} p_n / (omega + m) with the covariant momentum p_n = -k_n
// and s_{ln} = eps_{lnj} s^j. Singular only at m = 0, k = 0.
std::array<Mat, 3> breve_spin(const SpinTriple& S, const KVec& k, double m);

enum class Representation { rcqm, fw, dirac };

// A full set of ten generators indexed as p_mu, j_{mu nu} (lower indices).
struct GeneratorSet {
  Representation rep;
  SpinConfig config;
  double mass = 0.0;
  double t = 0.0;
  FirstOrderKOperator p0;                  // energy symbol of the representation
  std::array<FirstOrderKOperator, 3> p;    // p_l = -k_l
  std::array<FirstOrderKOperator, 3> rot;  // j_{23}, j_{31}, j_{12}
  std::array<FirstOrderKOperator, 3> boost;  // j_{01}, j_{02}, j_{03}
  KMatrixFn hamiltonian;                   // equation-operator symbol
  int dim() const { return p0.dim(); }
};

GeneratorSet rcqm_generators(const SpinConfig& config, double m, double t = 0.0);
GeneratorSet fw_generators(const SpinConfig& config, double m, double t = 0.0);
// Covariant-representation generators for N in {4, 8, 12, 16}; built from
// H(k) = Gamma^0 (Gamma.k + m), the nonlocal position operator and the
// conjugated spin s_D.
GeneratorSet dirac_generators(const SpinConfig& config, double m, double t = 0.0);

// All 45 pairwise commutators compared coefficient-wise with the Poincare
// algebra right-hand sides at sampled k; also checks each generator commutes
// (symbol level) with the representation's Hamiltonian, [G, H] = i dG/dt.
VerificationReport check_poincare(const GeneratorSet& gens, int samples,
                                  double tol, std::uint64_t seed = 1);

// w^mu w_mu applied to an analytic packet via nested differentiation;
// compared blockwise against m^2 s(s+1).
VerificationReport pauli_lubanski_check(const GeneratorSet& gens,
                                        const TestPacket& packet, double tol,
                                        int samples = 5, std::uint64_t seed = 2);

// Applies W = w^mu w_mu to the packet and returns the result at one k.
Vec pauli_lubanski_apply(const GeneratorSet& gens, const TestPacket& packet,
                         const KVec& k);

}  // namespace rcqm
