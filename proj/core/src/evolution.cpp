#include "rcqm/evolution.hpp"

#include <fstream>
#include <stdexcept>

namespace rcqm {

namespace {
const std::complex<double> I{0.0, 1.0};
}

GridState evolve_sf(const GridState& state, double m, double t) {
  if (m < 0) throw std::invalid_argument("evolve_sf: m must be nonnegative");
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  for (std::size_t i = 0; i < pts; ++i) {
    const std::complex<double> ph = std::exp(-I * omega(s.wavevector(i), m) * t);
    for (int c = 0; c < s.ncomp(); ++c) s.at(c, i) *= ph;
  }
  fft_inverse(s);
  return s;
}

GridState evolve_fw(const GridState& state, double m, double t) {
  const int n = state.ncomp();
  if (n % 2 != 0) throw std::invalid_argument("evolve_fw: ncomp must be even");
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  for (std::size_t i = 0; i < pts; ++i) {
    const double w = omega(s.wavevector(i), m);
    const std::complex<double> minus = std::exp(-I * w * t), plus = std::exp(I * w * t);
    for (int c = 0; c < n / 2; ++c) s.at(c, i) *= minus;
    for (int c = n / 2; c < n; ++c) s.at(c, i) *= plus;
  }
  fft_inverse(s);
  return s;
}

GridState evolve_dirac(const GridState& state, double m, double t) {
  const int n = state.ncomp();
  if (n != 4 && n != 8 && n != 12 && n != 16)
    throw std::invalid_argument("evolve_dirac: ncomp must be 4, 8, 12 or 16");
  const TransitionPair tp = fw_transition(n, m);
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  Vec mode(n);
  for (std::size_t i = 0; i < pts; ++i) {
    const KVec k = s.wavevector(i);
    const double w = omega(k, m);
    const std::complex<double> minus = std::exp(-I * w * t), plus = std::exp(I * w * t);
    for (int c = 0; c < n; ++c) mode[c] = s.at(c, i);
    Vec phi = tp.to_canonical(k) * mode;
    for (int c = 0; c < n / 2; ++c) phi[c] *= minus;
    for (int c = n / 2; c < n; ++c) phi[c] *= plus;
    mode = tp.to_covariant(k) * phi;
    for (int c = 0; c < n; ++c) s.at(c, i) = mode[c];
  }
  fft_inverse(s);
  return s;
}

GridState evolve_nonrel(const GridState& state, double m, double t) {
  if (m <= 0) throw std::invalid_argument("evolve_nonrel: m must be positive");
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  for (std::size_t i = 0; i < pts; ++i) {
    const double k2 = s.wavevector(i).squaredNorm();
    const std::complex<double> ph = std::exp(-I * (k2 / (2.0 * m)) * t);
    for (int c = 0; c < s.ncomp(); ++c) s.at(c, i) *= ph;
  }
  fft_inverse(s);
  return s;
}

namespace {

GridState conjugate_lower_block(const GridState& state) {
  GridState s = state;
  const int n = s.ncomp();
  const std::size_t pts = s.points();
  for (int c = n / 2; c < n; ++c)
    for (std::size_t i = 0; i < pts; ++i) s.at(c, i) = std::conj(s.at(c, i));
  return s;
}

GridState apply_transition(const GridState& state, double m, bool to_dirac) {
  const int n = state.ncomp();
  const TransitionPair tp = fw_transition(n, m);
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  Vec mode(n);
  for (std::size_t i = 0; i < pts; ++i) {
    const KVec k = s.wavevector(i);
    for (int c = 0; c < n; ++c) mode[c] = s.at(c, i);
    mode = (to_dirac ? tp.to_covariant(k) : tp.to_canonical(k)) * mode;
    for (int c = 0; c < n; ++c) s.at(c, i) = mode[c];
  }
  fft_inverse(s);
  return s;
}

}  // namespace

GridState transform_rep(const GridState& state, Representation from,
                        Representation to, double m) {
  if (from == to) return state;
  if (state.ncomp() % 2 != 0)
    throw std::invalid_argument("transform_rep: ncomp must be even");
  if (from == Representation::rcqm && to == Representation::fw)
    return conjugate_lower_block(state);
  if (from == Representation::fw && to == Representation::rcqm)
    return conjugate_lower_block(state);
  if (from == Representation::fw && to == Representation::dirac)
    return apply_transition(state, m, true);
  if (from == Representation::dirac && to == Representation::fw)
    return apply_transition(state, m, false);
  // two-step routes through fw
  return transform_rep(transform_rep(state, from, Representation::fw, m),
                       Representation::fw, to, m);
}

MeanValues mean_values(const GridState& state, double m, const Mat& s3, double t) {
  MeanValues out;
  out.t = t;
  out.norm = state.norm_sq();

  // mean s3 in position space
  const std::size_t pts = state.points();
  const int n = state.ncomp();
  std::complex<double> s3acc = 0.0;
  Vec f(n);
  for (std::size_t i = 0; i < pts; ++i) {
    for (int c = 0; c < n; ++c) f[c] = state.at(c, i);
    s3acc += f.dot(s3 * f);  // Eigen dot conjugates the left factor
  }
  out.mean_s3 = s3acc.real() * state.cell_volume();

  GridState s = state;
  fft_forward(s);
  // Parseval weight so that sum_k |a|^2 equals the discrete integral of |f|^2
  const double w_mode = state.cell_volume() * static_cast<double>(pts);
  for (std::size_t i = 0; i < pts; ++i) {
    const KVec k = s.wavevector(i);
    double a2 = 0.0;
    for (int c = 0; c < n; ++c) a2 += std::norm(s.at(c, i));
    a2 *= w_mode;
    out.p0 += omega(k, m) * a2;
    for (int d = 0; d < 3; ++d) out.p[d] += k[d] * a2;
  }
  return out;
}

void ConservedLog::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "t,norm,P0,P1,P2,P3,mean_s3\n";
  out.precision(15);
  for (const auto& v : samples)
    out << v.t << "," << v.norm << "," << v.p0 << "," << v.p[0] << "," << v.p[1]
        << "," << v.p[2] << "," << v.mean_s3 << "\n";
}

GridState synthesize_solution(const SpinConfig& config, Representation rep,
                              const GridState& amplitudes, double m) {
  if (amplitudes.ncomp() != config.dim())
    throw std::invalid_argument("synthesize_solution: component mismatch");
  GridState s = amplitudes;  // a(k) on the k-lattice
  fft_inverse(s);            // sum_k a(k) e^{+ikx}
  if (rep == Representation::rcqm) return s;
  const GridState fw = transform_rep(s, Representation::rcqm, Representation::fw, m);
  if (rep == Representation::fw) return fw;
  return transform_rep(fw, Representation::fw, Representation::dirac, m);
}

GridState synthesize_fw_direct(const SpinConfig& config, const GridState& amplitudes,
                               double m) {
  (void)m;
  if (amplitudes.ncomp() != config.dim())
    throw std::invalid_argument("synthesize_fw_direct: component mismatch");
  const int n = amplitudes.ncomp();
  // upper amplitudes ride e^{+ikx}; lower amplitudes are conjugated and ride
  // e^{-ikx}, i.e. conj(a(k)) e^{-ikx} = conj(a(k) e^{+ikx}) mode-wise.
  GridState upper = amplitudes;
  for (int c = n / 2; c < n; ++c)
    for (std::size_t i = 0; i < upper.points(); ++i) upper.at(c, i) = 0.0;
  fft_inverse(upper);
  GridState lower = amplitudes;
  for (int c = 0; c < n / 2; ++c)
    for (std::size_t i = 0; i < lower.points(); ++i) lower.at(c, i) = 0.0;
  fft_inverse(lower);
  GridState out = upper;
  for (int c = n / 2; c < n; ++c)
    for (std::size_t i = 0; i < out.points(); ++i)
      out.at(c, i) = std::conj(lower.at(c, i));
  return out;
}

VerificationReport cross_rep_equivalence(const GridState& state0, double m,
                                         double t, double tol) {
  VerificationReport rep;
  rep.suite = "evolution";
  const double scale = std::max(1.0, std::sqrt(state0.norm_sq()));

  const GridState evolved_rcqm = evolve_sf(state0, m, t);

  const GridState fw0 = transform_rep(state0, Representation::rcqm, Representation::fw, m);
  const GridState fw_path = evolve_fw(fw0, m, t);
  const GridState fw_from_rcqm =
      transform_rep(evolved_rcqm, Representation::rcqm, Representation::fw, m);
  rep.add("evolution/commute_rcqm_fw",
          "v-transform and time evolution commute", fw_path.distance_to(fw_from_rcqm) / scale,
          tol);

  const GridState d0 = transform_rep(fw0, Representation::fw, Representation::dirac, m);
  const GridState d_path = evolve_dirac(d0, m, t);
  const GridState d_from_rcqm = transform_rep(
      fw_from_rcqm, Representation::fw, Representation::dirac, m);
  rep.add("evolution/commute_rcqm_dirac",
          "full transform and time evolution commute",
          d_path.distance_to(d_from_rcqm) / scale, tol);

  const GridState back = transform_rep(
      transform_rep(d0, Representation::dirac, Representation::fw, m),
      Representation::fw, Representation::rcqm, m);
  rep.add("evolution/round_trip", "rcqm -> dirac -> rcqm is the identity",
          back.distance_to(state0) / scale, tol);
  return rep;
}

}  // namespace rcqm
