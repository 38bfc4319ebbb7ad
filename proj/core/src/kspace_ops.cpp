#include "rcqm/kspace_ops.hpp"

#include <stdexcept>

namespace rcqm {

namespace {

const std::complex<double> I{0.0, 1.0};
using cd = std::complex<double>;

// s_{ln} = eps_{lnj} s^j, 0-based spatial indices
Mat s_ln(const SpinTriple& S, int l, int n) {
  if (l == n) return Mat::Zero(S.dim(), S.dim());
  static const int  idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
  static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  return sg[l][n] * S.s[idx[l][n]];
}

KMatrixFn neg_k_times_identity(int dim, int l, double m) {
  return KMatrixFn::make(dim, m, [dim, l](const auto& k, double) {
    using T = std::decay_t<decltype(k[0])>;
    return SmallMat<T>::identity(dim).scaled(Cplx<T>(-k[l]));
  });
}

}  // namespace

FirstOrderAt eval_at(const FirstOrderKOperator& op, const KVec& k) {
  FirstOrderAt out;
  out.c0 = op.c0(k);
  for (int l = 0; l < 3; ++l) out.c[l] = op.c[l](k);
  return out;
}

CommutatorAt commutator_at(const FirstOrderKOperator& a,
                           const FirstOrderKOperator& b, const KVec& k) {
  const KJet a0 = a.c0.jet(k), b0 = b.c0.jet(k);
  std::array<KJet, 3> aj, bj;
  for (int l = 0; l < 3; ++l) {
    aj[l] = a.c[l].jet(k);
    bj[l] = b.c[l].jet(k);
  }
  CommutatorAt out;
  out.value.c0 = a0.value * b0.value - b0.value * a0.value;
  for (int l = 0; l < 3; ++l)
    out.value.c0 += aj[l].value * b0.d[l] - bj[l].value * a0.d[l];
  for (int n = 0; n < 3; ++n) {
    out.value.c[n] = a0.value * bj[n].value - bj[n].value * a0.value +
                     aj[n].value * b0.value - b0.value * aj[n].value;
    for (int l = 0; l < 3; ++l)
      out.value.c[n] += aj[l].value * bj[n].d[l] - bj[l].value * aj[n].d[l];
  }
  double sec = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int n = l; n < 3; ++n) {
      const Mat s = aj[l].value * bj[n].value - bj[n].value * aj[l].value +
                    aj[n].value * bj[l].value - bj[l].value * aj[n].value;
      sec = std::max(sec, s.cwiseAbs().maxCoeff());
    }
  out.second_order_residual = sec;
  return out;
}

std::array<Mat, 3> breve_spin(const SpinTriple& S, const KVec& k, double m) {
  if (m <= 0 && k.norm() == 0)
    throw std::invalid_argument("breve_spin: singular at m = 0, k = 0");
  const double om = omega(k, m);
  std::array<Mat, 3> out;
  for (int l = 0; l < 3; ++l) {
    Mat acc = Mat::Zero(S.dim(), S.dim());
    for (int n = 0; n < 3; ++n) acc += s_ln(S, l, n) * (-k[n]);
    out[l] = acc / (om + m);
  }
  return out;
}

// Generator coefficients are assembled as explicit KMatrixFns with
// dual-capable builders per representation.

namespace {

struct ConstMats {
  int dim;
  std::array<Mat, 3> spin;       // representation spin matrices (constant)
  Mat gamma0;                    // identity for rcqm
  std::array<Mat, 3> gammas;     // spatial gammas (dirac only)
  bool dirac = false;
};

// c0 of the rotation j_{ln}: S_{ln} + M_l(-k_n) - M_n(-k_l), where for the
// covariant representation M_l is the nonlocal position correction and the
// spin is the conjugated s_D; for rcqm/fw it is just the constant S_{ln}.
template <class T>
SmallMat<T> rot_c0_builder(const std::array<T, 3>& k, double m, const ConstMats& cm,
                           int l, int n) {
  static const int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
  static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  const int dim = cm.dim;
  if (!cm.dirac) {
    (void)k; (void)m;
    Mat s = sg[l][n] * cm.spin[idx[l][n]];
    return SmallMat<T>::lift(s);
  }
  // covariant representation
  const T om = omega(k, m);
  const T Om = om + T(m);
  // s_D,{ln} = Vm s_{ln} Vp
  Mat sln = sg[l][n] * cm.spin[idx[l][n]];
  const T nrm = T(1.0) / sqrt(T(2.0) * om * Om);
  SmallMat<T> vm = SmallMat<T>::identity(dim).scaled(Cplx<T>(Om));
  SmallMat<T> vp = vm;
  for (int j = 0; j < 3; ++j) {
    vm = vm - SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
    vp = vp + SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
  }
  vm = vm.scaled(Cplx<T>(nrm));
  vp = vp.scaled(Cplx<T>(nrm));
  SmallMat<T> out = vm * SmallMat<T>::lift(sln) * vp;

  // + M_l (-k_n) - M_n (-k_l) with
  // M_l = -i Gamma_l/(2 om) + (S x k)_l/(om Om) + i k_l (Gamma.k)/(2 om^2 Om)
  auto Mfn = [&](int a) -> SmallMat<T> {
    SmallMat<T> acc = SmallMat<T>::lift(cm.gammas[a]).scaled(
        Cplx<T>(T(0.0), T(-1.0) / (T(2.0) * om)));
    // (S x k)_a = eps_{a j n} S^j k_n
    for (int j = 0; j < 3; ++j)
      for (int nn = 0; nn < 3; ++nn) {
        const double e = 0.5 * (a - j) * (j - nn) * (nn - a);
        if (e != 0.0)
          acc = acc + SmallMat<T>::lift(cm.spin[j]).scaled(
                          Cplx<T>(T(e) * k[nn] / (om * Om)));
      }
    SmallMat<T> gk = SmallMat<T>::zero(dim);
    for (int j = 0; j < 3; ++j)
      gk = gk + SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
    acc = acc + gk.scaled(Cplx<T>(T(0.0), k[a] / (T(2.0) * om * om * Om)));
    return acc;
  };
  out = out + Mfn(l).scaled(Cplx<T>(-k[n])) - Mfn(n).scaled(Cplx<T>(-k[l]));
  return out;
}

// c0 of the boost j_{0l}: -t k_l I + (i/2) d_l p0 - B_l [- (1/2){M_l, p0}]
template <class T>
SmallMat<T> boost_c0_builder(const std::array<T, 3>& k, double m, const ConstMats& cm,
                             int l, double t, Representation rep) {
  const int dim = cm.dim;
  const T om = omega(k, m);
  const T Om = om + T(m);
  SmallMat<T> out = SmallMat<T>::identity(dim).scaled(Cplx<T>(T(-t) * k[l]));

  if (rep == Representation::rcqm) {
    // (i/2) d_l omega = (i/2) k_l / om
    out = out + SmallMat<T>::identity(dim).scaled(Cplx<T>(T(0.0), k[l] / (T(2.0) * om)));
    // - s-breve_l = - sum_n S_{ln} (-k_n) / Om
    static const int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    for (int n = 0; n < 3; ++n) {
      if (n == l) continue;
      const Mat sln = sg[l][n] * cm.spin[idx[l][n]];
      out = out + SmallMat<T>::lift(sln).scaled(Cplx<T>(k[n] / Om));
    }
    return out;
  }
  if (rep == Representation::fw) {
    out = out + SmallMat<T>::lift(cm.gamma0).scaled(Cplx<T>(T(0.0), k[l] / (T(2.0) * om)));
    static const int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
    static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    for (int n = 0; n < 3; ++n) {
      if (n == l) continue;
      const Mat g0sln = cm.gamma0 * (sg[l][n] * cm.spin[idx[l][n]]);
      out = out + SmallMat<T>::lift(g0sln).scaled(Cplx<T>(k[n] / Om));
    }
    return out;
  }

  // covariant representation
  // H(k) = Gamma0 (Gamma.k + m)
  SmallMat<T> H = SmallMat<T>::identity(dim).scaled(Cplx<T>(T(m)));
  for (int j = 0; j < 3; ++j)
    H = H + SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
  H = SmallMat<T>::lift(cm.gamma0) * H;
  // (i/2) d_l H = (i/2) Gamma0 Gamma_l
  out = out + SmallMat<T>::lift(cm.gamma0 * cm.gammas[l])
                  .scaled(Cplx<T>(T(0.0), T(0.5)));

  // M_l and -(1/2){M_l, H}
  auto Mfn = [&](int a) -> SmallMat<T> {
    SmallMat<T> acc = SmallMat<T>::lift(cm.gammas[a]).scaled(
        Cplx<T>(T(0.0), T(-1.0) / (T(2.0) * om)));
    for (int j = 0; j < 3; ++j)
      for (int nn = 0; nn < 3; ++nn) {
        const double e = 0.5 * (a - j) * (j - nn) * (nn - a);
        if (e != 0.0)
          acc = acc + SmallMat<T>::lift(cm.spin[j]).scaled(
                          Cplx<T>(T(e) * k[nn] / (om * Om)));
      }
    SmallMat<T> gk = SmallMat<T>::zero(dim);
    for (int j = 0; j < 3; ++j)
      gk = gk + SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
    acc = acc + gk.scaled(Cplx<T>(T(0.0), k[a] / (T(2.0) * om * om * Om)));
    return acc;
  };
  const SmallMat<T> Ml = Mfn(l);
  out = out - (Ml * H + H * Ml).scaled(Cplx<T>(0.5));

  // - H s_D-breve_l / (om Om):  B_l = H sum_n s_D,{ln} (-k_n) / (om Om)
  const T nrm = T(1.0) / sqrt(T(2.0) * om * Om);
  SmallMat<T> vm = SmallMat<T>::identity(dim).scaled(Cplx<T>(Om));
  SmallMat<T> vp = vm;
  for (int j = 0; j < 3; ++j) {
    vm = vm - SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
    vp = vp + SmallMat<T>::lift(cm.gammas[j]).scaled(Cplx<T>(k[j]));
  }
  vm = vm.scaled(Cplx<T>(nrm));
  vp = vp.scaled(Cplx<T>(nrm));
  static const int idx[3][3] = {{-1, 2, 1}, {2, -1, 0}, {1, 0, -1}};
  static const double sg[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  SmallMat<T> sbreve = SmallMat<T>::zero(dim);
  for (int n = 0; n < 3; ++n) {
    if (n == l) continue;
    const Mat sln = sg[l][n] * cm.spin[idx[l][n]];
    sbreve = sbreve + (vm * SmallMat<T>::lift(sln) * vp).scaled(Cplx<T>(-k[n]));
  }
  out = out - (H * sbreve).scaled(Cplx<T>(T(1.0) / (om * Om)));
  return out;
}

GeneratorSet build_set(Representation rep, const SpinConfig& config, double m,
                       double t) {
  const int dim = config.dim();
  ConstMats cm;
  cm.dim = dim;
  cm.dirac = (rep == Representation::dirac);
  if (rep == Representation::rcqm) {
    const SpinTriple S = multiplet_spin(config);
    for (int j = 0; j < 3; ++j) cm.spin[j] = S.s[j];
    cm.gamma0 = Mat::Identity(dim, dim);
  } else {
    const SpinTriple S = fw_spin(config);
    for (int j = 0; j < 3; ++j) cm.spin[j] = S.s[j];
    cm.gamma0 = gamma0(dim);
    if (rep == Representation::dirac) {
      if (dim != 4 && dim != 8 && dim != 12 && dim != 16)
        throw std::invalid_argument("dirac_generators: N must be 4, 8, 12 or 16");
      const auto sig = sigma_blocks(dim);
      const int h = dim / 2;
      for (int j = 0; j < 3; ++j) {
        cm.gammas[j] = Mat::Zero(dim, dim);
        cm.gammas[j].block(0, h, h, h) = sig[j];
        cm.gammas[j].block(h, 0, h, h) = -sig[j];
      }
    }
  }

  GeneratorSet set;
  set.rep = rep;
  set.config = config;
  set.mass = m;
  set.t = t;
  const KMatrixFn zero_fn = KMatrixFn::constant(Mat::Zero(dim, dim), m);

  // p0 / Hamiltonian symbol
  if (rep == Representation::dirac) {
    set.p0.c0 = dirac_hamiltonian(dim, m);
  } else {
    const Mat g0 = cm.gamma0;
    set.p0.c0 = KMatrixFn::make(dim, m, [g0](const auto& k, double mass) {
      using T = std::decay_t<decltype(k[0])>;
      return SmallMat<T>::lift(g0).scaled(Cplx<T>(omega(k, mass)));
    });
  }
  set.hamiltonian = set.p0.c0;
  for (auto& c : set.p0.c) c = zero_fn;
  set.p0.t = t;

  for (int l = 0; l < 3; ++l) {
    set.p[l].c0 = neg_k_times_identity(dim, l, m);
    for (auto& c : set.p[l].c) c = zero_fn;
    set.p[l].t = t;
  }

  // rotations: c_l = +i k_n, c_n = -i k_l, c0 = rot_c0_builder
  const int rot_pairs[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int r = 0; r < 3; ++r) {
    const int l = rot_pairs[r][0], n = rot_pairs[r][1];
    FirstOrderKOperator op;
    op.t = t;
    op.c0 = KMatrixFn::make(dim, m, [cm, l, n](const auto& k, double mass) {
      return rot_c0_builder(k, mass, cm, l, n);
    });
    for (int a = 0; a < 3; ++a) op.c[a] = zero_fn;
    op.c[l] = KMatrixFn::make(dim, m, [dim, n](const auto& k, double) {
      using T = std::decay_t<decltype(k[0])>;
      return SmallMat<T>::identity(dim).scaled(Cplx<T>(T(0.0), k[n]));
    });
    op.c[n] = KMatrixFn::make(dim, m, [dim, l](const auto& k, double) {
      using T = std::decay_t<decltype(k[0])>;
      return SmallMat<T>::identity(dim).scaled(Cplx<T>(T(0.0), -k[l]));
    });
    set.rot[r] = op;
  }

  // boosts: c_l = +i p0(k), c0 = boost_c0_builder
  for (int l = 0; l < 3; ++l) {
    FirstOrderKOperator op;
    op.t = t;
    op.c0 = KMatrixFn::make(dim, m, [cm, l, t, rep](const auto& k, double mass) {
      return boost_c0_builder(k, mass, cm, l, t, rep);
    });
    for (int a = 0; a < 3; ++a) op.c[a] = zero_fn;
    if (rep == Representation::dirac) {
      const auto gam = cm.gammas;
      const Mat g0 = cm.gamma0;
      op.c[l] = KMatrixFn::make(dim, m, [gam, g0, dim](const auto& k, double mass) {
        using T = std::decay_t<decltype(k[0])>;
        SmallMat<T> H = SmallMat<T>::identity(dim).scaled(Cplx<T>(T(mass)));
        for (int j = 0; j < 3; ++j)
          H = H + SmallMat<T>::lift(gam[j]).scaled(Cplx<T>(k[j]));
        return (SmallMat<T>::lift(g0) * H).scaled(Cplx<T>(T(0.0), T(1.0)));
      });
    } else {
      const Mat g0 = cm.gamma0;
      op.c[l] = KMatrixFn::make(dim, m, [g0](const auto& k, double mass) {
        using T = std::decay_t<decltype(k[0])>;
        return SmallMat<T>::lift(g0).scaled(Cplx<T>(T(0.0), omega(k, mass)));
      });
    }
    set.boost[l] = op;
  }
  return set;
}

}  // namespace

GeneratorSet rcqm_generators(const SpinConfig& config, double m, double t) {
  if (m <= 0) throw std::invalid_argument("rcqm_generators: m must be positive");
  return build_set(Representation::rcqm, config, m, t);
}

GeneratorSet fw_generators(const SpinConfig& config, double m, double t) {
  if (m <= 0) throw std::invalid_argument("fw_generators: m must be positive");
  const int n = config.dim();
  if (n != 4 && n != 6 && n != 8 && n != 10 && n != 12 && n != 16)
    throw std::invalid_argument("fw_generators: dimension must be 4, 6, 8, 10, 12 or 16");
  return build_set(Representation::fw, config, m, t);
}

GeneratorSet dirac_generators(const SpinConfig& config, double m, double t) {
  if (m <= 0) throw std::invalid_argument("dirac_generators: m must be positive");
  return build_set(Representation::dirac, config, m, t);
}

namespace {

// generator indexing: 0..3 = p_mu, then j_{mu nu} via pair lookup
struct GenRef {
  double sign;
  int id;  // 0..3 p_mu; 4..6 boosts j_{0l}; 7..9 rotations j_{23}, j_{31}, j_{12}
};

GenRef jidx(int mu, int nu) {
  static const int pair_id[4][4] = {{-1, 4, 5, 6}, {-1, -1, 9, -1}, {-1, -1, -1, 7}, {-1, 8, -1, -1}};
  // stored pairs: (0,1),(0,2),(0,3),(2,3),(3,1),(1,2)
  if (mu == nu) return {0.0, -1};
  if (pair_id[mu][nu] >= 0) return {1.0, pair_id[mu][nu]};
  return {-1.0, pair_id[nu][mu]};
}

const FirstOrderKOperator& gen_by_id(const GeneratorSet& g, int id) {
  if (id == 0) return g.p0;
  if (id < 4) return g.p[id - 1];
  if (id < 7) return g.boost[id - 4];
  return g.rot[id - 7];
}

struct Term {
  cd coeff;
  int id;
};

// Poincare algebra right-hand sides with metric (+,-,-,-)
std::vector<Term> expected_commutator(int a, int b) {
  const double g[4] = {1, -1, -1, -1};
  auto p_of = [](int mu) { return mu; };
  std::vector<Term> out;
  auto add_j = [&](cd coeff, int mu, int nu) {
    if (mu == nu) return;
    const GenRef r = jidx(mu, nu);
    out.push_back({coeff * r.sign, r.id});
  };
  auto add_p = [&](cd coeff, int mu) { out.push_back({coeff, p_of(mu)}); };

  auto decode = [](int id, int& mu, int& nu) {
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
    mu = pairs[id - 4][0];
    nu = pairs[id - 4][1];
  };

  if (a < 4 && b < 4) return out;  // [p, p] = 0
  if (a < 4 && b >= 4) {
    int rho, sig;
    decode(b, rho, sig);
    // [p_mu, j_{rho sig}] = i g_{mu rho} p_sig - i g_{mu sig} p_rho
    if (a == rho) add_p(I * g[a], sig);
    if (a == sig) add_p(-I * g[a], rho);
    return out;
  }
  if (a >= 4 && b < 4) {
    auto sw = expected_commutator(b, a);
    for (auto& t : sw) t.coeff = -t.coeff;
    return sw;
  }
  int mu, nu, rho, sig;
  decode(a, mu, nu);
  decode(b, rho, sig);
  // [j_{mu nu}, j_{rho sig}] =
  //   -i (g_{mu rho} j_{nu sig} + g_{rho nu} j_{sig mu} +
  //       g_{nu sig} j_{mu rho} + g_{sig mu} j_{rho nu})
  if (mu == rho) add_j(-I * g[mu], nu, sig);
  if (rho == nu) add_j(-I * g[rho], sig, mu);
  if (nu == sig) add_j(-I * g[nu], mu, rho);
  if (sig == mu) add_j(-I * g[sig], rho, nu);
  return out;
}

}  // namespace

VerificationReport check_poincare(const GeneratorSet& gens, int samples,
                                  double tol, std::uint64_t seed) {
  if (tol <= 0) throw std::invalid_argument("check_poincare: tol must be positive");
  VerificationReport rep;
  rep.suite = "poincare";
  const double m = gens.mass;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0 * m, 2.0 * m);

  double worst_comm = 0.0, worst_second = 0.0, worst_eq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const KVec k(dist(rng), dist(rng), dist(rng));
    std::array<FirstOrderAt, 10> at;
    for (int id = 0; id < 10; ++id) at[id] = eval_at(gen_by_id(gens, id), k);

    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b) {
        const CommutatorAt lhs = commutator_at(gen_by_id(gens, a), gen_by_id(gens, b), k);
        worst_second = std::max(worst_second, lhs.second_order_residual);
        Mat r0 = lhs.value.c0;
        std::array<Mat, 3> rc = lhs.value.c;
        for (const Term& t : expected_commutator(a, b)) {
          r0 -= t.coeff * at[t.id].c0;
          for (int l = 0; l < 3; ++l) rc[l] -= t.coeff * at[t.id].c[l];
        }
        double res = r0.cwiseAbs().maxCoeff();
        for (int l = 0; l < 3; ++l) res = std::max(res, rc[l].cwiseAbs().maxCoeff());
        worst_comm = std::max(worst_comm, res);
      }

    // each generator commutes with the equation symbol: [G, h] = i dG/dt
    const KJet h = gens.hamiltonian.jet(k);
    for (int id = 0; id < 10; ++id) {
      const auto& G = gen_by_id(gens, id);
      const KJet g0 = G.c0.jet(k);
      Mat c0 = g0.value * h.value - h.value * g0.value;
      for (int l = 0; l < 3; ++l) c0 += G.c[l](k) * h.d[l];
      if (id >= 4 && id < 7) {
        // boost j_{0l} carries t p_l, so [G, H] = -i dG/dt = -i p_l = +i k_l
        c0 -= I * k[id - 4] * Mat::Identity(gens.dim(), gens.dim());
      }
      double res = c0.cwiseAbs().maxCoeff();
      for (int l = 0; l < 3; ++l) {
        const Mat cl = G.c[l](k) * h.value - h.value * G.c[l](k);
        res = std::max(res, cl.cwiseAbs().maxCoeff());
      }
      worst_eq = std::max(worst_eq, res);
    }
  }
  rep.add("poincare/commutators", "all 45 pairs match the algebra's right-hand sides",
          worst_comm, tol);
  rep.add("poincare/second_order_cancellation",
          "symmetric second-derivative coefficients cancel", worst_second, 1e-12);
  rep.add("poincare/equation_symmetry", "[G, H] = i dG/dt at symbol level", worst_eq,
          tol);
  return rep;
}

namespace {

struct VecJet {
  Vec v;
  std::array<Vec, 3> d;
};

VecJet apply_with_grad(const FirstOrderKOperator& op, const TestPacket& pkt,
                       const KVec& k) {
  const KJet c0 = op.c0.jet(k);
  std::array<KJet, 3> cj;
  for (int l = 0; l < 3; ++l) cj[l] = op.c[l].jet(k);
  const cd s = pkt.scalar(k);
  const auto sg = pkt.scalar_grad(k);
  const auto sh = pkt.scalar_hess(k);
  const Vec& amp = pkt.amplitude;

  VecJet out;
  out.v = c0.value * (s * amp);
  for (int l = 0; l < 3; ++l) out.v += cj[l].value * (sg[l] * amp);
  for (int n = 0; n < 3; ++n) {
    out.d[n] = c0.d[n] * (s * amp) + c0.value * (sg[n] * amp);
    for (int l = 0; l < 3; ++l)
      out.d[n] += cj[l].d[n] * (sg[l] * amp) + cj[l].value * (sh[n][l] * amp);
  }
  return out;
}

Vec apply_to_vecjet(const FirstOrderKOperator& op, const VecJet& vj, const KVec& k) {
  Vec out = op.c0(k) * vj.v;
  for (int l = 0; l < 3; ++l) out += op.c[l](k) * vj.d[l];
  return out;
}

double eps4(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  double sign = 1.0;
  int q[4] = {p[0], p[1], p[2], p[3]};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (q[i] == q[j]) return 0.0;
      if (q[i] > q[j]) {
        std::swap(q[i], q[j]);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace

Vec pauli_lubanski_apply(const GeneratorSet& gens, const TestPacket& packet,
                         const KVec& k) {
  const int dim = gens.dim();
  const double g[4] = {1, -1, -1, -1};
  // upper-index translations: p^0 = p0 symbol, p^l = +k_l
  auto p_upper = [&](int mu) -> Mat {
    if (mu == 0) return gens.p0.c0(k);
    return k[mu - 1] * Mat::Identity(dim, dim);
  };
  auto p_upper_jet = [&](int mu) -> KJet {
    if (mu == 0) return gens.p0.c0.jet(k);
    KJet j;
    j.value = k[mu - 1] * Mat::Identity(dim, dim);
    for (int l = 0; l < 3; ++l)
      j.d[l] = (l == mu - 1 ? 1.0 : 0.0) * Mat::Identity(dim, dim);
    return j;
  };

  Vec W = Vec::Zero(dim);
  for (int mu = 0; mu < 4; ++mu) {
    // w_mu = (1/2) eps_{mu nu rho sig} p^nu j^{rho sig}
    // first pass: w_mu applied to the packet with gradient
    VecJet inner;
    inner.v = Vec::Zero(dim);
    for (auto& dv : inner.d) dv = Vec::Zero(dim);
    struct WTerm {
      double coeff;
      int nu, jid;
      double jsign;
    };
    std::vector<WTerm> terms;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const double e = eps4(mu, nu, rho, sig);
          if (e == 0.0) continue;
          // j^{rho sig} = g^{rho rho} g^{sig sig} j_{rho sig}
          const GenRef r = jidx(rho, sig);
          terms.push_back({0.5 * e * g[rho] * g[sig], nu, r.id, r.sign});
        }
    for (const auto& t : terms) {
      const VecJet jpsi = apply_with_grad(gen_by_id(gens, t.jid), packet, k);
      const KJet pj = p_upper_jet(t.nu);
      const double c = t.coeff * t.jsign;
      inner.v += c * (pj.value * jpsi.v);
      for (int n = 0; n < 3; ++n)
        inner.d[n] += c * (pj.d[n] * jpsi.v + pj.value * jpsi.d[n]);
    }
    // second pass: w^mu = g^{mu mu} w_mu applied to inner
    Vec outer = Vec::Zero(dim);
    for (const auto& t : terms) {
      Vec jinner = apply_to_vecjet(gen_by_id(gens, t.jid), inner, k);
      outer += (t.coeff * t.jsign) * (p_upper(t.nu) * jinner);
    }
    W += g[mu] * outer;
  }
  return W;
}

VerificationReport pauli_lubanski_check(const GeneratorSet& gens,
                                        const TestPacket& packet, double tol,
                                        int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "casimir";
  const double m = gens.mass;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-m, m);

  // expected: m^2 * Casimir matrix; for the covariant representation the
  // matrix Casimir is the conjugated one evaluated pointwise.
  Mat cas;
  if (gens.rep == Representation::rcqm)
    cas = casimir_spin(multiplet_spin(gens.config));
  else
    cas = casimir_spin(fw_spin(gens.config));

  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const KVec k = packet.center + KVec(dist(rng), dist(rng), dist(rng)) * 0.3;
    const Vec W = pauli_lubanski_apply(gens, packet, k);
    Vec expect;
    if (gens.rep == Representation::dirac) {
      const TransitionPair tp = fw_transition(gens.dim(), m);
      const Mat casD = tp.to_covariant(k) * cas * tp.to_canonical(k);
      expect = m * m * (casD * packet.value(k));
    } else {
      expect = m * m * (cas * packet.value(k));
    }
    const double scale = std::max(1e-300, expect.cwiseAbs().maxCoeff());
    const double base = std::max(scale, m * m * packet.value(k).cwiseAbs().maxCoeff());
    worst = std::max(worst, (W - expect).cwiseAbs().maxCoeff() / base);
  }
  rep.add("casimir/pauli_lubanski", "w^mu w_mu = m^2 s(s+1) blockwise", worst, tol);
  return rep;
}

}  // namespace rcqm
