#include "rcqm/grid.hpp"

#include <fftw3.h>

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rcqm {

GridState::GridState(std::array<int, 3> dims, std::array<double, 3> box, int ncomp)
    : n_(dims), box_(box), ncomp_(ncomp) {
  for (int d = 0; d < 3; ++d) {
    if (n_[d] < 1) throw std::invalid_argument("GridState: dims must be positive");
    if (box_[d] <= 0) throw std::invalid_argument("GridState: box must be positive");
  }
  if (ncomp_ < 1) throw std::invalid_argument("GridState: ncomp must be positive");
  data_.assign(static_cast<std::size_t>(ncomp_) * points(), {0.0, 0.0});
}

KVec GridState::wavevector(std::size_t idx) const {
  const int i3 = static_cast<int>(idx % n_[2]);
  const int i2 = static_cast<int>((idx / n_[2]) % n_[1]);
  const int i1 = static_cast<int>(idx / (static_cast<std::size_t>(n_[1]) * n_[2]));
  const int f[3] = {i1 <= n_[0] / 2 ? i1 : i1 - n_[0],
                    i2 <= n_[1] / 2 ? i2 : i2 - n_[1],
                    i3 <= n_[2] / 2 ? i3 : i3 - n_[2]};
  KVec k;
  for (int d = 0; d < 3; ++d) k[d] = 2.0 * M_PI * f[d] / box_[d];
  return k;
}

double GridState::norm_sq() const {
  double acc = 0.0;
  for (const auto& z : data_) acc += std::norm(z);
  return acc * cell_volume();
}

double GridState::distance_to(const GridState& o) const {
  if (o.data_.size() != data_.size())
    throw std::invalid_argument("GridState::distance_to: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) acc = std::max(acc, std::abs(data_[i] - o.data_[i]));
  return acc;
}

namespace {

void fft_all(GridState& s, int sign) {
  const auto& n = s.dims();
  const std::size_t pts = s.points();
  // forward: a_k = (1/N) sum_x f(x) e^{-ik.x}, so that f(x) = sum_k a_k e^{+ik.x}
  for (int c = 0; c < s.ncomp(); ++c) {
    fftw_complex* ptr = reinterpret_cast<fftw_complex*>(s.data().data() + c * pts);
    fftw_plan plan = fftw_plan_dft_3d(n[0], n[1], n[2], ptr, ptr,
                                      sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  if (sign == FFTW_FORWARD) {
    const double scale = 1.0 / static_cast<double>(pts);
    for (auto& z : s.data()) z *= scale;
  }
}

}  // namespace

void fft_forward(GridState& s) { fft_all(s, FFTW_FORWARD); }
void fft_inverse(GridState& s) { fft_all(s, FFTW_BACKWARD); }

GridState apply_sqrt_operator(const GridState& state, double m) {
  if (m < 0) throw std::invalid_argument("apply_sqrt_operator: m must be nonnegative");
  GridState s = state;
  fft_forward(s);
  const std::size_t pts = s.points();
  for (std::size_t i = 0; i < pts; ++i) {
    const double w = omega(s.wavevector(i), m);
    for (int c = 0; c < s.ncomp(); ++c) s.at(c, i) *= w;
  }
  fft_inverse(s);
  return s;
}

namespace {

template <class T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

}  // namespace

void write_rcqm_array(const std::string& path, const GridState& s, bool real_layout) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write("RCQM1", 5);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(s.ncomp()));
  put<std::uint32_t>(out, 3);
  for (int d = 0; d < 3; ++d) put<std::uint32_t>(out, static_cast<std::uint32_t>(s.dims()[d]));
  put<std::uint32_t>(out, real_layout ? 1u : 0u);
  for (int d = 0; d < 3; ++d) put<double>(out, s.box()[d]);
  for (const auto& z : s.data()) {
    put<double>(out, z.real());
    if (!real_layout) put<double>(out, z.imag());
  }
}

GridState read_rcqm_array(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[5];
  in.read(magic, 5);
  if (std::memcmp(magic, "RCQM1", 5) != 0)
    throw std::runtime_error("bad magic in " + path);
  const auto ncomp = get<std::uint32_t>(in);
  const auto ndim = get<std::uint32_t>(in);
  if (ndim != 3) throw std::runtime_error("unsupported ndim in " + path);
  std::array<int, 3> dims;
  for (int d = 0; d < 3; ++d) dims[d] = static_cast<int>(get<std::uint32_t>(in));
  const auto flags = get<std::uint32_t>(in);
  std::array<double, 3> box;
  for (int d = 0; d < 3; ++d) box[d] = get<double>(in);
  GridState s(dims, box, static_cast<int>(ncomp));
  for (auto& z : s.data()) {
    const double re = get<double>(in);
    const double im = (flags & 1u) ? 0.0 : get<double>(in);
    z = {re, im};
  }
  if (!in) throw std::runtime_error("truncated file " + path);
  return s;
}

}  // namespace rcqm
