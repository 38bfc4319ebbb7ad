#include "rcqm/clifford.hpp"

#include <stdexcept>

namespace rcqm {

namespace {

const std::complex<double> I{0.0, 1.0};

Mat pauli(int j) {
  Mat s(2, 2);
  switch (j) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Mat dirac_gamma(int mu) {
  Mat g = Mat::Zero(4, 4);
  if (mu == 0) {
    g.block(0, 0, 2, 2) = Mat::Identity(2, 2);
    g.block(2, 2, 2, 2) = -Mat::Identity(2, 2);
  } else {
    g.block(0, 2, 2, 2) = pauli(mu - 1);
    g.block(2, 0, 2, 2) = -pauli(mu - 1);
  }
  return g;
}

}  // namespace

Mat gamma0(int n) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("gamma0: N must be even");
  Mat g = Mat::Zero(n, n);
  for (int i = 0; i < n / 2; ++i) g(i, i) = 1.0;
  for (int i = n / 2; i < n; ++i) g(i, i) = -1.0;
  return g;
}

std::array<Mat, 3> sigma_blocks(int n) {
  std::array<Mat, 3> out;
  switch (n) {
    case 4:
      for (int j = 0; j < 3; ++j) out[j] = pauli(j);
      break;
    case 8:
      for (int j = 0; j < 3; ++j) {
        out[j] = Mat::Zero(4, 4);
        out[j].block(0, 0, 2, 2) = pauli(j);
        out[j].block(2, 2, 2, 2) = pauli(j);
      }
      break;
    case 12:
      // antidiagonal/diagonal I3 blocks: sigma^j acting on two 3-blocks
      for (int j = 0; j < 3; ++j) {
        out[j] = Mat::Zero(6, 6);
        const Mat s = pauli(j);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            out[j].block(3 * a, 3 * b, 3, 3) = s(a, b) * Mat::Identity(3, 3);
      }
      break;
    case 16:
      for (int j = 0; j < 3; ++j) {
        out[j] = Mat::Zero(8, 8);
        for (int a = 0; a < 4; ++a) out[j].block(2 * a, 2 * a, 2, 2) = pauli(j);
      }
      break;
    default:
      throw std::invalid_argument("sigma_blocks: N must be one of 4, 8, 12, 16");
  }
  return out;
}

GammaSet standard_gammas() {
  GammaSet set;
  set.kind = GammaKind::standard4;
  set.label = "standard4";
  for (int mu = 0; mu < 4; ++mu)
    set.elems.push_back(RLinearOp::from_linear(dirac_gamma(mu)));
  const Mat g4 = dirac_gamma(0) * dirac_gamma(1) * dirac_gamma(2) * dirac_gamma(3);
  set.elems.push_back(RLinearOp::from_linear(g4));
  set.metric = {1, -1, -1, -1, -1};
  return set;
}

GammaSet qm_gammas() {
  const Mat g0 = dirac_gamma(0), g1 = dirac_gamma(1), g2 = dirac_gamma(2),
            g3 = dirac_gamma(3);
  const Mat g4 = g0 * g1 * g2 * g3;
  const RLinearOp C = RLinearOp::conjugation(4);
  GammaSet set;
  set.kind = GammaKind::qm4;
  set.label = "qm4";
  set.elems = {
      RLinearOp::from_linear(g0),
      RLinearOp::from_linear(g1) * C,
      RLinearOp::from_linear(g0 * g2) * C,
      RLinearOp::from_linear(g3) * C,
      RLinearOp::from_linear(g0 * g4) * C,
  };
  set.metric = {1, -1, -1, -1, -1};
  return set;
}

GammaSet extended_gammas(ExtendedRep rep) {
  const Mat g0 = dirac_gamma(0), g1 = dirac_gamma(1), g2 = dirac_gamma(2),
            g3 = dirac_gamma(3);
  const Mat g4 = g0 * g1 * g2 * g3;
  const RLinearOp C = RLinearOp::conjugation(4);
  GammaSet set;
  if (rep == ExtendedRep::standard) {
    set.kind = GammaKind::extended7;
    set.label = "extended7";
    set.elems = {
        RLinearOp::from_linear(g1),
        RLinearOp::from_linear(g2),
        RLinearOp::from_linear(g3),
        RLinearOp::from_linear(g4),
        RLinearOp::from_linear(g1 * g3) * C,
        RLinearOp::from_linear(I * g1 * g3) * C,
        RLinearOp::from_linear(I * g0),
    };
  } else {
    // conjugation-dressed counterparts of the seven generators
    const RLinearOp b1 = RLinearOp::from_linear(g1) * C;
    const RLinearOp b2 = RLinearOp::from_linear(g0 * g2) * C;
    const RLinearOp b3 = RLinearOp::from_linear(g3) * C;
    const RLinearOp b4 = RLinearOp::from_linear(g0) * b1 * b2 * b3;
    set.kind = GammaKind::qm_extended7;
    set.label = "qm_extended7";
    set.elems = {
        b1,
        b2,
        b3,
        b4,
        RLinearOp::from_linear(g1 * g3) * C,
        RLinearOp::from_linear(-I * g2 * g4) * C,
        RLinearOp::from_linear(I * Mat::Identity(4, 4)),
    };
  }
  set.metric = std::vector<int>(7, -1);
  return set;
}

GammaSet big_gammas(int n) {
  if (n != 8 && n != 12 && n != 16)
    throw std::invalid_argument("big_gammas: N must be 8, 12 or 16");
  const auto sig = sigma_blocks(n);
  const int h = n / 2;
  GammaSet set;
  set.kind = n == 8 ? GammaKind::big8 : (n == 12 ? GammaKind::big12 : GammaKind::big16);
  set.label = "big" + std::to_string(n);
  set.elems.push_back(RLinearOp::from_linear(gamma0(n)));
  for (int j = 0; j < 3; ++j) {
    Mat g = Mat::Zero(n, n);
    g.block(0, h, h, h) = sig[j];
    g.block(h, 0, h, h) = -sig[j];
    set.elems.push_back(RLinearOp::from_linear(g));
  }
  set.metric = {1, -1, -1, -1};
  return set;
}

VerificationReport check_clifford(const GammaSet& set, double tol) {
  if (tol <= 0) throw std::invalid_argument("check_clifford: tol must be positive");
  VerificationReport rep;
  rep.suite = "clifford";
  const int n = set.dim();
  const size_t m = set.elems.size();
  const RLinearOp id = RLinearOp::identity(n);
  double worst = 0.0;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      RLinearOp anti = set.elems[a] * set.elems[b];
      anti = RLinearOp(anti.linear() + (set.elems[b] * set.elems[a]).linear(),
                       anti.antilinear() + (set.elems[b] * set.elems[a]).antilinear());
      const double expected = (a == b) ? 2.0 * set.metric[a] : 0.0;
      RLinearOp target(expected * Mat::Identity(n, n), Mat::Zero(n, n));
      worst = std::max(worst, anti.distance_to(target));
    }
  rep.add(set.label + "/anticommutators",
          "{G^a, G^b} = 2 g^{ab} I with g = declared metric", worst, tol);

  if (set.kind == GammaKind::standard4 || set.kind == GammaKind::qm4) {
    RLinearOp prod = set.elems[0];
    for (size_t a = 1; a < m; ++a) prod = prod * set.elems[a];
    rep.add(set.label + "/product", "G^0 G^1 G^2 G^3 G^4 = -I",
            prod.distance_to(RLinearOp(-Mat::Identity(n, n), Mat::Zero(n, n))), tol);
  }
  if (set.kind == GammaKind::extended7 || set.kind == GammaKind::qm_extended7) {
    RLinearOp prod = set.elems[0];
    for (size_t a = 1; a < m; ++a) prod = prod * set.elems[a];
    rep.add(set.label + "/product", "G^1 ... G^7 = +I",
            prod.distance_to(RLinearOp::identity(n)), tol);
  }
  return rep;
}

}  // namespace rcqm
