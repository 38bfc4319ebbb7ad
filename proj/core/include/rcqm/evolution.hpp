#pragma once

#include "rcqm/grid.hpp"
#include "rcqm/kspace_ops.hpp"
#include "rcqm/transitions.hpp"

namespace rcqm {

// Exact spectral propagators: every Fourier mode is multiplied by the exact
// phase, so there is no time-step error and the evolution is unitary.

// Phase e^{-i omega t} on every component.
GridState evolve_sf(const GridState& state, double m, double t);

// Per mode e^{-i Gamma0 omega t}: upper block e^{-i omega t}, lower block
// e^{+i omega t}. Works for any even component count.
GridState evolve_fw(const GridState& state, double m, double t);

// Per mode to_covariant(k) e^{-i Gamma0 omega t} to_canonical(k); equals the
// eigendecomposition propagator of H(k).
GridState evolve_dirac(const GridState& state, double m, double t);

// Nonrelativistic propagator e^{-i (k^2 / 2m) t} (rest phase removed).
GridState evolve_nonrel(const GridState& state, double m, double t);

// rcqm <-> fw: conjugate the lower block pointwise in position space;
// fw <-> dirac: per-mode multiplication by the transition matrices.
GridState transform_rep(const GridState& state, Representation from,
                        Representation to, double m);

// Per-sample conserved quantities. P0 и P_l are momentum-space sums over
// omega |a|^2 and k_l |a|^2; mean_s3 uses the representation's s3 matrix.
struct MeanValues {
  double t = 0.0;
  double norm = 0.0;  // integral of |f|^2
  double p0 = 0.0;
  std::array<double, 3> p{{0.0, 0.0, 0.0}};
  double mean_s3 = 0.0;
};
MeanValues mean_values(const GridState& state, double m, const Mat& s3,
                       double t = 0.0);

struct ConservedLog {
  std::vector<MeanValues> samples;
  void write_csv(const std::string& path) const;
};

// Synthesis of a state from mode amplitudes a(k) (tabulated over the grid's
// k-lattice, component-major like GridState). The rcqm state is
// sum_k a_alpha(k) e^{+ik.x} d_alpha; fw/dirac states are produced by
// applying v (and the covariant transition) so the frequency split follows
// from the transforms.
GridState synthesize_solution(const SpinConfig& config, Representation rep,
                              const GridState& amplitudes, double m);

// Direct canonical-field construction (upper amplitudes on e^{+ikx}, lower
// amplitudes conjugated on e^{-ikx}); cross-checks the v-mapped synthesis.
GridState synthesize_fw_direct(const SpinConfig& config, const GridState& amplitudes,
                               double m);

// Commuting-diagram residual: transform(evolve_sf(f)) vs
// evolve_dirac(transform(f)), with the fw intermediate checked too.
VerificationReport cross_rep_equivalence(const GridState& state0, double m,
                                         double t, double tol);

}  // namespace rcqm
