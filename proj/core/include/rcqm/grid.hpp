#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rcqm/kmatrix.hpp"

namespace rcqm {

// N-component complex field on a periodic grid; data layout is
// component-major, then row-major in (n1, n2, n3) with the last index
// fastest.
class GridState {
 public:
  GridState() = default;
  GridState(std::array<int, 3> dims, std::array<double, 3> box, int ncomp);

  const std::array<int, 3>& dims() const { return n_; }
  const std::array<double, 3>& box() const { return box_; }
  int ncomp() const { return ncomp_; }
  std::size_t points() const {
    return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }
  double cell_volume() const {
    return box_[0] / n_[0] * (box_[1] / n_[1]) * (box_[2] / n_[2]);
  }

  std::complex<double>& at(int c, std::size_t idx) { return data_[c * points() + idx]; }
  const std::complex<double>& at(int c, std::size_t idx) const {
    return data_[c * points() + idx];
  }
  std::vector<std::complex<double>>& data() { return data_; }
  const std::vector<std::complex<double>>& data() const { return data_; }

  // wavevector of the mode with flat spatial index idx
  KVec wavevector(std::size_t idx) const;
  std::size_t flat_index(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * n_[1] + i2) * n_[2] + i3;
  }

  double norm_sq() const;  // discrete integral of |f|^2
  double distance_to(const GridState& other) const;

 private:
  std::array<int, 3> n_{{1, 1, 1}};
  std::array<double, 3> box_{{1.0, 1.0, 1.0}};
  int ncomp_ = 0;
  std::vector<std::complex<double>> data_;
};

// In-place FFT of every component; forward maps f(x) -> coefficients a_k of
// f(x) = sum_k a_k exp(+i k.x) (inverse undoes it, normalization included).
void fft_forward(GridState& s);
void fft_inverse(GridState& s);

// Fourier multiplier by omega(k, m); the square-root-of-Laplacian-plus-mass
// operator.
GridState apply_sqrt_operator(const GridState& state, double m);

// RCQM-ARRAY binary snapshot format: magic "RCQM1", little-endian u32 fields
// (ncomp, ndim, n1, n2, n3, flags), three little-endian f64 box lengths, then
// component-major row-major data as f64 (re, im) pairs, or f64 singletons
// when the real-layout flag (bit 0) is set.
void write_rcqm_array(const std::string& path, const GridState& s,
                      bool real_layout = false);
GridState read_rcqm_array(const std::string& path);

}  // namespace rcqm
