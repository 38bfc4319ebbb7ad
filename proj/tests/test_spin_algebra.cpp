#include <doctest.h>

#include "rcqm/spin_algebra.hpp"

using namespace rcqm;
using cd = std::complex<double>;

namespace {
double mat_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }
}

TEST_CASE("spin half equals the Pauli matrices over two") {
  const SpinTriple S = su2_generators(1);
  Mat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 0.5, 0.5, 0;
  s2 << 0, cd(0, -0.5), cd(0, 0.5), 0;
  s3 << 0.5, 0, 0, -0.5;
  CHECK(mat_diff(S.s[0], s1) < 1e-15);
  CHECK(mat_diff(S.s[1], s2) < 1e-15);
  CHECK(mat_diff(S.s[2], s3) < 1e-15);
}

TEST_CASE("spin one matches the printed tridiagonal form") {
  const SpinTriple S = su2_generators(2);
  const double r = 1.0 / std::sqrt(2.0);
  Mat s1(3, 3);
  s1 << 0, r, 0, r, 0, r, 0, r, 0;
  CHECK(mat_diff(S.s[0], s1) < 1e-15);
  Mat s3 = Mat::Zero(3, 3);
  s3(0, 0) = 1;
  s3(2, 2) = -1;
  CHECK(mat_diff(S.s[2], s3) < 1e-15);
  CHECK(std::abs(S.s[1](0, 1) - cd(0, -r)) < 1e-15);
  CHECK(std::abs(S.s[1](1, 0) - cd(0, r)) < 1e-15);
}

TEST_CASE("spin three-halves third component is half diag(3,1,-1,-3)") {
  const SpinTriple S = su2_generators(3);
  Mat s3 = Mat::Zero(4, 4);
  s3.diagonal() << 1.5, 0.5, -0.5, -1.5;
  CHECK(mat_diff(S.s[2], s3) < 1e-15);
  CHECK(std::abs(S.s[0](0, 1) - 0.5 * std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(S.s[0](1, 2) - 1.0) < 1e-15);
}

TEST_CASE("spin two first component entries") {
  const SpinTriple S = su2_generators(4);
  CHECK(std::abs(S.s[0](0, 1) - 1.0) < 1e-15);  // = 2/2
  CHECK(std::abs(S.s[0](1, 2) - 0.5 * std::sqrt(6.0)) < 1e-15);
  Mat s3 = Mat::Zero(5, 5);
  s3.diagonal() << 2, 1, 0, -1, -2;
  CHECK(mat_diff(S.s[2], s3) < 1e-15);
}

TEST_CASE("su2 relations hold for all spins up to eight") {
  for (int ts = 0; ts <= 16; ++ts) {
    const auto rep = check_su2(su2_generators(ts), 1e-12);
    CHECK(rep.pass());
  }
}

TEST_CASE("casimir values for singlets") {
  CHECK(mat_diff(casimir_spin(su2_generators(3)), 3.75 * Mat::Identity(4, 4)) < 1e-13);
  CHECK(mat_diff(casimir_spin(su2_generators(4)), 6.0 * Mat::Identity(5, 5)) < 1e-13);
}

TEST_CASE("doublet spin third components and eigenstructure") {
  // vector doublet: s3 = diag(1, 0, -1, -1, 0, 1)
  const SpinTriple S6 = multiplet_spin(SpinConfig::parse("1,1-"));
  Mat d6 = Mat::Zero(6, 6);
  d6.diagonal() << 1, 0, -1, -1, 0, 1;
  CHECK(mat_diff(S6.s[2], d6) < 1e-15);
  CHECK(check_su2(S6, 1e-12).pass());

  // spinor doublet s3 eigenvalues on the orts: (1/2, -1/2, -1/2, 1/2)
  const SpinTriple S4 = multiplet_spin(SpinConfig::parse("1/2,1/2-"));
  Mat d4 = Mat::Zero(4, 4);
  d4.diagonal() << 0.5, -0.5, -0.5, 0.5;
  CHECK(mat_diff(S4.s[2], d4) < 1e-15);

  // vector-scalar multiplet, both particle sectors: diag(1, 0, -1, 0)
  const SpinTriple S41 = multiplet_spin(SpinConfig::parse("1,0"));
  Mat d41 = Mat::Zero(4, 4);
  d41.diagonal() << 1, 0, -1, 0;
  CHECK(mat_diff(S41.s[2], d41) < 1e-15);
}

TEST_CASE("antiparticle block is the negated conjugate of the particle block") {
  const SpinTriple part = su2_generators(2);
  const SpinTriple full = multiplet_spin(SpinConfig::parse("1,1-"));
  for (int j = 0; j < 3; ++j) {
    const Mat anti = full.s[j].block(3, 3, 3, 3);
    CHECK(mat_diff(anti, -part.s[j].conjugate()) < 1e-15);
  }
}

TEST_CASE("multiplet casimir is blockwise") {
  const SpinConfig cfg = SpinConfig::parse("1,0");
  Mat want = Mat::Zero(4, 4);
  want.diagonal() << 2, 2, 2, 0;
  CHECK(mat_diff(casimir_spin(multiplet_spin(cfg)), want) < 1e-13);

  const SpinConfig big = SpinConfig::parse("2,1,2-,1-");
  Mat want16 = Mat::Zero(16, 16);
  want16.diagonal() << 6, 6, 6, 6, 6, 2, 2, 2, 6, 6, 6, 6, 6, 2, 2, 2;
  CHECK(mat_diff(casimir_spin(multiplet_spin(big)), want16) < 1e-13);
  CHECK(mat_diff(casimir_expected(big), want16) < 1e-15);
}

TEST_CASE("charge sign matrices") {
  const ChargeSign g4 = charge_sign(SpinConfig::parse("1/2,1/2-"));
  Mat want = Mat::Zero(4, 4);
  want.diagonal() << -1, -1, 1, 1;
  CHECK(mat_diff(g4.g, want) < 1e-15);
  CHECK(!g4.convention_flag);

  const ChargeSign g8 = charge_sign(SpinConfig::parse("3/2,3/2-"));
  CHECK(g8.g(0, 0).real() == -1.0);
  CHECK(g8.g(7, 7).real() == 1.0);

  const ChargeSign neutral = charge_sign(SpinConfig::parse("2,2"));
  CHECK(neutral.convention_flag);
  CHECK(mat_diff(neutral.g, -Mat::Identity(10, 10)) < 1e-15);
}

TEST_CASE("check_su2 detects broken algebra and accepts spin zero") {
  SpinTriple bad = su2_generators(2);
  bad.s[0](0, 1) += 1e-3;
  CHECK(!check_su2(bad, 1e-12).pass());

  const SpinTriple zero = su2_generators(0);
  CHECK(check_su2(zero, 1e-12).pass());
}

TEST_CASE("config parsing round trip and validation") {
  const SpinConfig cfg = SpinConfig::parse(" 3/2 , 3/2- ");
  CHECK(cfg.dim() == 8);
  CHECK(cfg.is_paired_doublet());
  CHECK(cfg.to_string() == "3/2,3/2-");
  CHECK_THROWS_AS(SpinConfig::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SpinConfig::parse("1/3"), std::invalid_argument);
  CHECK(!SpinConfig::parse("1,0").is_paired_doublet());
  CHECK(SpinConfig::parse("1,0,1-,0-").is_paired_doublet());
}
