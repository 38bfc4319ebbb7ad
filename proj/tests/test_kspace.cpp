#include <doctest.h>

#include <random>

#include "rcqm/kspace_ops.hpp"

using namespace rcqm;
using cd = std::complex<double>;

TEST_CASE("omega basics") {
  CHECK(omega(KVec(0, 0, 0), 2.5) == 2.5);
  CHECK(omega(KVec(3, 4, 0), 0.0) == doctest::Approx(5.0).epsilon(1e-15));
  const KVec k(0.3, -1.2, 0.7);
  const double m = 1.7;
  const double w = omega(k, m);
  CHECK(std::abs(w * w - k.squaredNorm() - m * m) < 1e-14 * w * w);
}

TEST_CASE("dual numbers differentiate omega exactly") {
  const KVec k(0.4, -0.9, 1.3);
  const double m = 0.8;
  const std::array<Dual3, 3> kd{Dual3(k[0], 0), Dual3(k[1], 1), Dual3(k[2], 2)};
  const Dual3 w = omega(kd, m);
  const double w0 = omega(k, m);
  CHECK(std::abs(w.v - w0) < 1e-15);
  for (int l = 0; l < 3; ++l)
    CHECK(std::abs(w.d[l] - k[l] / w0) < 1e-13);
}

TEST_CASE("breve spin vanishes at k=0 and matches the cross-product form") {
  const SpinTriple S = su2_generators(1);
  const auto zero = breve_spin(S, KVec(0, 0, 0), 1.0);
  for (const auto& m : zero) CHECK(m.cwiseAbs().maxCoeff() == 0.0);

  // k along z: first component proportional to s^2
  const double kappa = 0.7, m = 1.0;
  const auto b = breve_spin(S, KVec(0, 0, kappa), m);
  const double w = omega(KVec(0, 0, kappa), m);
  CHECK((b[0] - kappa / (w + m) * S.s[1]).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(breve_spin(S, KVec(0, 0, 0), 0.0), std::invalid_argument);
}

TEST_CASE("canonical pair and a sample algebra instance") {
  const GeneratorSet g = rcqm_generators(SpinConfig::parse("1"), 1.0, 0.0);
  const KVec k(0.2, 0.5, -0.3);
  // [p1, j12] = -i p2 (instance with g11 = -1)
  const CommutatorAt c = commutator_at(g.p[0], g.rot[2], k);
  const FirstOrderAt p2 = eval_at(g.p[1], k);
  CHECK((c.value.c0 - cd(0, -1) * p2.c0).cwiseAbs().maxCoeff() < 1e-14);
  // [p1, p2] = 0
  const CommutatorAt pp = commutator_at(g.p[0], g.p[1], k);
  CHECK(pp.value.c0.cwiseAbs().maxCoeff() == 0.0);
  // p0 at k=0 equals m I
  CHECK((g.p0.c0(KVec(0, 0, 0)) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("poincare algebra closes for singlets and multiplets") {
  for (const char* id : {"1/2", "1", "3/2", "2", "1,1-", "1,0"}) {
    const GeneratorSet g = rcqm_generators(SpinConfig::parse(id), 1.0, 0.0);
    const auto rep = check_poincare(g, 6, 1e-8, 7);
    INFO(id, " residual ", rep.max_residual());
    CHECK(rep.pass());
  }
}

TEST_CASE("poincare algebra closes for fw and covariant sets, t independent") {
  for (double t : {0.0, 1.7}) {
    const SpinConfig cfg = SpinConfig::parse("1/2,1/2-");
    CHECK(check_poincare(fw_generators(cfg, 1.0, t), 6, 1e-8, 8).pass());
    CHECK(check_poincare(dirac_generators(cfg, 1.0, t), 6, 1e-8, 9).pass());
  }
  const SpinConfig v8 = SpinConfig::parse("1,0,1-,0-");
  CHECK(check_poincare(dirac_generators(v8, 1.0, 0.0), 4, 1e-8, 10).pass());
}

TEST_CASE("deliberate boost-spin sign mutation breaks the algebra") {
  // flip the s-breve part of every boost: c0 -> c0 + 2 s-breve
  GeneratorSet g = rcqm_generators(SpinConfig::parse("1"), 1.0, 0.0);
  const SpinTriple S = su2_generators(2);
  // boost c0 at t = 0 is (i/2) k_l/omega - s-breve_l; rebuild with + s-breve
  for (int l = 0; l < 3; ++l) {
    const std::array<Mat, 3> spin = S.s;
    g.boost[l].c0 = KMatrixFn::make(3, 1.0, [spin, l](const auto& k, double mass) {
      using T = std::decay_t<decltype(k[0])>;
      static const int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
      static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
      const T om = omega(k, mass);
      SmallMat<T> acc =
          SmallMat<T>::identity(3).scaled(Cplx<T>(T(0.0), k[l] / (T(2.0) * om)));
      for (int n = 0; n < 3; ++n) {
        if (n == l) continue;
        acc = acc + SmallMat<T>::lift(sg[l][n] * spin[idx[l][n]])
                        .scaled(Cplx<T>(-k[n] / (om + T(mass))));
      }
      return acc;
    });
  }
  // boost-boost pairs must now fail
  CHECK(!check_poincare(g, 3, 1e-8, 11).pass());
}

TEST_CASE("second-order cancellation holds on all pairs") {
  const GeneratorSet g = dirac_generators(SpinConfig::parse("1/2,1/2-"), 1.0, 0.0);
  const KVec k(0.4, -0.2, 0.9);
  const CommutatorAt c = commutator_at(g.boost[0], g.boost[1], k);
  CHECK(c.second_order_residual < 1e-12);
}

TEST_CASE("covariant energy symbol has omega eigenvalues") {
  const GeneratorSet g = dirac_generators(SpinConfig::parse("1/2,1/2-"), 1.3, 0.0);
  const KVec k(0.5, -0.7, 0.2);
  const Mat h = g.p0.c0(k);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const double w = omega(k, 1.3);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(std::abs(es.eigenvalues()[i]) - w) < 1e-12);
}

TEST_CASE("pauli lubanski reproduces the spin casimir") {
  TestPacket pkt;
  pkt.center = KVec(0.2, -0.1, 0.4);
  pkt.sigma = 0.7;
  pkt.poly = {0.1, 0.0, -0.2};

  // singlet spin 1/2: W psi = (3/4) m^2 psi
  {
    const double m = 1.1;
    const GeneratorSet g = rcqm_generators(SpinConfig::parse("1/2"), m, 0.0);
    TestPacket p = pkt;
    p.amplitude = Vec::Ones(2);
    const KVec k = pkt.center;
    const Vec W = pauli_lubanski_apply(g, p, k);
    const Vec want = 0.75 * m * m * p.value(k);
    CHECK((W - want).cwiseAbs().maxCoeff() < 1e-8 * m * m);
  }
  // multiplet (1,0): blockwise m^2 diag(2 I3, 0)
  {
    const double m = 0.9;
    const GeneratorSet g = rcqm_generators(SpinConfig::parse("1,0"), m, 0.0);
    TestPacket p = pkt;
    p.amplitude = Vec::Ones(4);
    const KVec k = pkt.center + KVec(0.05, 0.0, -0.08);
    const Vec W = pauli_lubanski_apply(g, p, k);
    Mat cas = Mat::Zero(4, 4);
    cas.diagonal() << 2, 2, 2, 0;
    const Vec want = m * m * (cas * p.value(k));
    CHECK((W - want).cwiseAbs().maxCoeff() < 1e-8 * m * m);
  }
  // homogeneity: m -> 2m scales W by 4 on a spin-1/2 packet
  {
    TestPacket p = pkt;
    p.amplitude = Vec::Ones(2);
    const KVec k = pkt.center;
    const Vec W1 =
        pauli_lubanski_apply(rcqm_generators(SpinConfig::parse("1/2"), 1.0, 0.0), p, k);
    const Vec W2 =
        pauli_lubanski_apply(rcqm_generators(SpinConfig::parse("1/2"), 2.0, 0.0), p, k);
    CHECK((4.0 * W1 - W2).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("pauli lubanski check runs for fw and dirac sets") {
  TestPacket pkt;
  pkt.center = KVec(0.3, 0.1, -0.2);
  pkt.sigma = 0.6;
  pkt.poly = {0.0, 0.1, 0.0};
  const SpinConfig cfg = SpinConfig::parse("1/2,1/2-");
  pkt.amplitude = Vec::Ones(4);
  CHECK(pauli_lubanski_check(fw_generators(cfg, 1.0, 0.0), pkt, 1e-6).pass());
  CHECK(pauli_lubanski_check(dirac_generators(cfg, 1.0, 0.0), pkt, 1e-6).pass());
}
