#include "rcqm/planewave.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rcqm {

std::vector<Vec> cartesian_orts(int n) {
  if (n < 1) throw std::invalid_argument("cartesian_orts: N must be positive");
  std::vector<Vec> out(n, Vec::Zero(n));
  for (int i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

SpinorBasis dirac_spinors(int n, const KVec& k, double m) {
  if (m <= 0) throw std::invalid_argument("dirac_spinors: m must be positive");
  const TransitionPair tp = fw_transition(n, m);
  const Mat vm = tp.to_covariant(k);
  const Mat vp = tp.to_canonical(k);
  SpinorBasis basis;
  basis.n = n;
  basis.k = k;
  basis.m = m;
  const auto orts = cartesian_orts(n);
  for (int a = 0; a < n / 2; ++a) basis.vectors.push_back(vm * orts[a]);
  for (int b = n / 2; b < n; ++b) basis.vectors.push_back(vp * orts[b]);
  return basis;
}

VerificationReport check_spinor_basis(const SpinorBasis& basis, double tol) {
  VerificationReport rep;
  rep.suite = "spinors";
  const int n = basis.n;
  double ortho = 0.0;
  Mat completeness = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::complex<double> prod = basis.vectors[a].dot(basis.vectors[b]);
      ortho = std::max(ortho, std::abs(prod - (a == b ? 1.0 : 0.0)));
    }
    completeness += basis.vectors[a] * basis.vectors[a].adjoint();
  }
  rep.add("spinors/orthonormal", "v_a^dag v_b = delta_ab", ortho, tol);
  rep.add("spinors/complete", "sum_a v_a v_a^dag = I",
          (completeness - Mat::Identity(n, n)).cwiseAbs().maxCoeff(), tol);
  const double om = omega(basis.k, basis.m);
  const double lhs = (om + basis.m) * (om + basis.m) + basis.k.squaredNorm();
  const double rhs = 2.0 * om * (om + basis.m);
  rep.add("spinors/normalization_identity", "(omega+m)^2 + k^2 = 2 omega (omega+m)",
          std::abs(lhs - rhs) / rhs, tol);
  return rep;
}

namespace {

VerificationReport eigen_table(const std::string& label, const Mat& op,
                               const std::vector<Vec>& vecs,
                               const std::vector<double>& eigs, double tol) {
  VerificationReport rep;
  rep.suite = "eigen-tables";
  double worst = 0.0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const double r = (op * vecs[i] - eigs[i] * vecs[i]).cwiseAbs().maxCoeff();
    worst = std::max(worst, r);
  }
  rep.add(label, "s3 x = lambda x row-by-row", worst, tol);
  return rep;
}

std::vector<double> expected_s3_list(const SpinConfig& config) {
  std::vector<double> out;
  for (const auto& e : config.entries()) {
    const double s = 0.5 * e.twice_spin;
    for (int i = 0; i <= e.twice_spin; ++i) {
      const double lam = s - i;
      out.push_back(e.sector == Sector::antiparticle ? -lam : lam);
    }
  }
  return out;
}

std::vector<double> expected_fw_s3_list(const SpinConfig& config) {
  std::vector<double> out;
  for (const auto& e : config.entries()) {
    const double s = 0.5 * e.twice_spin;
    for (int i = 0; i <= e.twice_spin; ++i) out.push_back(s - i);
  }
  return out;
}

}  // namespace

VerificationReport spin_eigen_suite(const std::string& rep_id, double tol, double m,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.5 * m, 1.5 * m);
  const KVec k(dist(rng), dist(rng), dist(rng));

  if (rep_id.rfind("rcqm:", 0) == 0) {
    const SpinConfig cfg = SpinConfig::parse(rep_id.substr(5));
    const SpinTriple S = multiplet_spin(cfg);
    return eigen_table("eigen/" + rep_id, S.s[2], cartesian_orts(cfg.dim()),
                       expected_s3_list(cfg), tol);
  }
  if (rep_id.rfind("fw:", 0) == 0) {
    const SpinConfig cfg = SpinConfig::parse(rep_id.substr(3));
    const SpinTriple S = fw_spin(cfg);
    return eigen_table("eigen/" + rep_id, S.s[2], cartesian_orts(cfg.dim()),
                       expected_fw_s3_list(cfg), tol);
  }
  if (rep_id.rfind("charge:", 0) == 0) {
    const SpinConfig cfg = SpinConfig::parse(rep_id.substr(7));
    const ChargeSign g = charge_sign(cfg);
    std::vector<double> eigs;
    for (const auto& e : cfg.entries())
      for (int i = 0; i <= e.twice_spin; ++i)
        eigs.push_back(e.sector == Sector::antiparticle ? 1.0 : -1.0);
    return eigen_table("eigen/" + rep_id, g.g, cartesian_orts(cfg.dim()), eigs, tol);
  }

  // covariant tables: s3_D on the plane-wave spinors, the positive-frequency
  // family evaluated at -k.
  int n = 4;
  SpinConfig cfg = SpinConfig::parse("1/2,1/2-");
  if (rep_id == "dirac8_vector") {
    n = 8;
    cfg = SpinConfig::parse("1,0,1-,0-");
  } else if (rep_id == "dirac8_spin32") {
    n = 8;
    cfg = SpinConfig::parse("3/2,3/2-");
  } else if (rep_id == "dirac12") {
    n = 12;
    cfg = SpinConfig::parse("2,0,2-,0-");
  } else if (rep_id == "dirac16") {
    n = 16;
    cfg = SpinConfig::parse("2,1,2-,1-");
  } else if (rep_id != "dirac4") {
    throw std::invalid_argument("spin_eigen_suite: unknown rep id " + rep_id);
  }
  const auto sD = dirac_spin_computed(n, cfg, m);
  const Mat s3_at_k = sD[2](k);
  const Mat s3_at_mk = sD[2](KVec(-k));
  const SpinorBasis basis = dirac_spinors(n, k, m);
  const auto fw_list = expected_fw_s3_list(cfg);
  std::vector<Vec> vecs;
  std::vector<double> eigs;
  VerificationReport rep;
  rep.suite = "eigen-tables";
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    const Mat& op = (a < n / 2) ? s3_at_k : s3_at_mk;
    const double lam = fw_list[a];
    const double r =
        (op * basis.vectors[a] - lam * basis.vectors[a]).cwiseAbs().maxCoeff();
    worst = std::max(worst, r);
  }
  rep.add("eigen/" + rep_id,
          "s3_D v = lambda v (positive-frequency family at -k)", worst, tol);
  return rep;
}

std::vector<std::string> spin_eigen_rep_ids() {
  return {"rcqm:1/2",      "rcqm:1",        "rcqm:3/2",     "rcqm:2",
          "rcqm:1/2,1/2-", "rcqm:1,1-",     "rcqm:1,0",     "rcqm:1,0,1-,0-",
          "rcqm:3/2,3/2-", "rcqm:2,2-",     "rcqm:2,0,2-,0-", "rcqm:2,1,2-,1-",
          "fw:1/2,1/2-",   "fw:1,1-",       "fw:1,0,1-,0-", "fw:3/2,3/2-",
          "fw:2,2-",       "fw:2,0,2-,0-",  "fw:2,1,2-,1-",
          "charge:1/2,1/2-", "charge:3/2,3/2-",
          "dirac4",        "dirac8_vector", "dirac8_spin32", "dirac12", "dirac16"};
}

VerificationReport helicity_check(const SpinTriple& S, const SpinConfig& config,
                                  const KVec& k, double tol) {
  if (k.norm() == 0) throw std::invalid_argument("helicity_check: k must be nonzero");
  VerificationReport rep;
  rep.suite = "su2";
  const KVec khat = k / k.norm();
  Mat proj = Mat::Zero(S.dim(), S.dim());
  for (int j = 0; j < 3; ++j) proj += khat[j] * S.s[j];
  Eigen::SelfAdjointEigenSolver<Mat> es(proj);
  std::vector<double> got(es.eigenvalues().data(),
                          es.eigenvalues().data() + S.dim());
  std::vector<double> want;
  for (const auto& e : config.entries()) {
    const double s = 0.5 * e.twice_spin;
    for (int i = 0; i <= e.twice_spin; ++i) want.push_back(s - i);
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i)
    worst = std::max(worst, std::abs(got[i] - want[i]));
  rep.add("helicity/" + config.to_string(),
          "spectrum of s.k/|k| is {s, s-1, ..., -s} per block", worst, tol);
  return rep;
}

}  // namespace rcqm
