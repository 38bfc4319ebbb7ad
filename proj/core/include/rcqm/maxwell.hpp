#pragma once

#include "rcqm/evolution.hpp"

namespace rcqm {

// Real E^0..E^3, H^0..H^3 fields on the grid; the field-strength realization
// of the 8-component covariant equation.
struct FieldState {
  std::array<int, 3> dims{{1, 1, 1}};
  std::array<double, 3> box{{1.0, 1.0, 1.0}};
  // component-major, same spatial layout as GridState; order E0..E3, H0..H3
  std::vector<double> data;

  FieldState() = default;
  FieldState(std::array<int, 3> d, std::array<double, 3> b);
  std::size_t points() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  double& at(int c, std::size_t i) { return data[c * points() + i]; }
  double at(int c, std::size_t i) const { return data[c * points() + i]; }
  double energy() const;  // discrete integral of E^2 + H^2 (all 8 components)
  double distance_to(const FieldState& o) const;
};

// The componentwise field -> 8-spinor map and its inverse. psi_to_fields
// rejects inputs outside the image subspace (lower block must equal the
// negated permuted upper block).
GridState fields_to_psi(const FieldState& f);
FieldState psi_to_fields(const GridState& psi, double tol = 1e-9);
double psi_image_residual(const GridState& psi);

// The 16 real first-order equations obtained by substituting the field map
// into the covariant equation, as coefficient tables
//   d0 F = sum_j Cd[j] d_j F + m Cm F
// for the upper branch (rows from the upper four complex components) and the
// lower branch (mass sign flipped). The extraction is numeric-exact and is
// the normative system; diffs against the printed form are emitted by
// derive_signed_system_report.
struct SignedSystem {
  std::array<Eigen::Matrix<double, 8, 8>, 3> cd;  // coefficients of d_j
  Eigen::Matrix<double, 8, 8> cm;                 // coefficient of m
  double m = 0.0;
};
SignedSystem derive_signed_system(double m);
SignedSystem lower_branch_system(double m);

// Extraction self-check (against exact derivatives of random polynomial
// fields), branch structure, the free-field limit at m = 0, and the
// constraint-propagation analysis.
VerificationReport derive_signed_system_report(double m);

// Exact per-mode propagator of the upper-branch system (the symbol is
// anti-Hermitian, so the flow is norm- and energy-preserving). The second
// entry point integrates the same system with classic fourth-order
// Runge-Kutta and spectral spatial derivatives.
FieldState evolve_maxwell(const FieldState& f, double m, double t);
FieldState evolve_maxwell_rk4(const FieldState& f, double m, double t, double dt);

// L2 norms of the two non-evolutionary lines div E - m H3 and div H + m E3.
std::array<double, 2> constraint_residual(const FieldState& f, double m);

// Snapshot + time series output.
void write_field_state(const std::string& path, const FieldState& f);
FieldState read_field_state(const std::string& path);

struct MaxwellLogRow {
  double t = 0.0;
  double energy = 0.0;
  double c1 = 0.0, c2 = 0.0;
};
void write_maxwell_csv(const std::string& path, const std::vector<MaxwellLogRow>& rows);

}  // namespace rcqm
