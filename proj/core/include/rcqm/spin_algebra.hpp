#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rcqm/report.hpp"

namespace rcqm {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class Sector { particle, antiparticle };

// One multiplet entry: spin stored as twice_spin to keep half-integers exact.
struct SpinEntry {
  int twice_spin = 0;
  Sector sector = Sector::particle;
};

// Ordered list of (spin, sector) blocks defining an N-component multiplet,
// N = sum of (twice_spin + 1).
class SpinConfig {
 public:
  SpinConfig() = default;
  explicit SpinConfig(std::vector<SpinEntry> entries);

  // Parses strings like "1/2,1/2-", "1,0,1-,0-", "2". A '-' suffix marks the
  // antiparticle sector.
  static SpinConfig parse(const std::string& text);

  const std::vector<SpinEntry>& entries() const { return entries_; }
  int dim() const;
  bool has_antiparticle() const;
  // true iff the second half mirrors the first half with flipped sector,
  // the layout required by the canonical-field split.
  bool is_paired_doublet() const;
  std::string to_string() const;

 private:
  std::vector<SpinEntry> entries_;
};

// Three N x N Hermitian matrices satisfying [s^j, s^l] = i eps^{jln} s^n.
struct SpinTriple {
  std::array<Mat, 3> s;
  int dim() const { return static_cast<int>(s[0].rows()); }
};

// Standard ladder construction, s3 = diag(s, s-1, ..., -s), off-diagonal
// entries nonnegative in s1 (Condon-Shortley phases).
SpinTriple su2_generators(int twice_spin);

// Block-diagonal multiplet spin: particle blocks are su2_generators output,
// antiparticle blocks are the negated complex conjugates (-conj(s), the
// linear matrix realizing the conjugated block).
SpinTriple multiplet_spin(const SpinConfig& config);

// sum_j (s^j)^2; equals s(s+1) I on each irreducible block.
Mat casimir_spin(const SpinTriple& S);

// Expected Casimir for a config as a diagonal matrix of s_i(s_i+1) blocks.
Mat casimir_expected(const SpinConfig& config);

// Charge-sign matrix g = diag(-I on particle blocks, +I on antiparticle
// blocks). For all-particle configs returns -I and sets the report flag.
struct ChargeSign {
  Mat g;
  bool convention_flag = false;  // set when no antiparticle sector exists
};
ChargeSign charge_sign(const SpinConfig& config);

// Commutator and Hermiticity residuals of an SU(2) triple.
VerificationReport check_su2(const SpinTriple& S, double tol,
                             const std::string& label = "su2");

}  // namespace rcqm
