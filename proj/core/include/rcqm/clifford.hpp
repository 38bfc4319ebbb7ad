#pragma once

#include <string>
#include <vector>

#include "rcqm/rlinear.hpp"

namespace rcqm {

enum class GammaKind {
  standard4,     // gamma^0..gamma^4, metric (+----)
  qm4,           // conjugation-dressed 5-set, metric (+----)
  extended7,     // 7 generators over the reals; squares are -I
  qm_extended7,  // same in the conjugation-dressed representation
  big8,
  big12,
  big16,
};

// A set of anticommuting operators. Elements are stored as RLinearOp so the
// conjugation-dressed sets fit the same interface; purely matrix sets have
// vanishing antilinear parts.
struct GammaSet {
  GammaKind kind;
  std::string label;
  std::vector<RLinearOp> elems;
  std::vector<int> metric;  // +-1 per element: elem^2 = metric * I
  int dim() const { return elems.empty() ? 0 : elems[0].dim(); }
};

// Dirac matrices in the standard representation, gamma^4 = g0 g1 g2 g3;
// the product of all five is -I4.
GammaSet standard_gammas();

// The conjugation-dressed ("quantum-mechanical") five: gbar^0 = g0,
// gbar^1 = g1 C, gbar^2 = g0 g2 C, gbar^3 = g3 C, gbar^4 = g0 g4 C.
GammaSet qm_gammas();

enum class ExtendedRep { standard, qm };

// Seven generators: the four spatial-type matrices plus three built with C
// and i. All seven square to -I (signature (0,7) over the reals); pairwise
// anticommutators vanish; the ordered product of all seven is +I4. The
// printed relation with a +delta^{AB} right-hand side cannot hold for
// operators squaring to -I, so the set carries an all -1 metric and the
// discrepancy is recorded by the errata machinery.
GammaSet extended_gammas(ExtendedRep rep);

// Gamma^0..Gamma^3 for N = 8, 12, 16 built from block identity matrices and
// the N/2-dimensional Pauli-block matrices Sigma^j; metric (+---).
GammaSet big_gammas(int n);

// Sigma^j blocks used by big_gammas and the transition operators:
//   N=4: sigma^j, N=8: diag(sigma,sigma), N=12: sigma x I3,
//   N=16: diag(sigma,sigma,sigma,sigma).
std::array<Mat, 3> sigma_blocks(int n);

// Gamma^0 = diag(I_{N/2}, -I_{N/2}) for any even N (the canonical-field
// Hamiltonian matrix; full Gamma sets exist only for N in {4,8,12,16}).
Mat gamma0(int n);

// Max anticommutator residual against the set's declared metric, plus the
// product identity where one is defined.
VerificationReport check_clifford(const GammaSet& set, double tol);

}  // namespace rcqm
