#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ets/errors.hpp"

namespace ets {

// Uniform rectangular grid in 1D/2D state space with the matched Fourier
// grid. Per axis: x_j = center - L + j*dx with dx = 2L/N, and
// u_k = (k - N/2)*du with du = pi/L, so du*dx = 2*pi/N exactly.
class GridSpec {
 public:
  struct Axis {
    double center;
    double half_width;  // L > 0
    int n;              // power of two, 64 <= n <= 65536
  };

  explicit GridSpec(std::vector<Axis> axes);

  static GridSpec make_1d(double center, double half_width, int n);
  static GridSpec make_2d(double center_x, double half_width_x, int nx,
                          double center_y, double half_width_y, int ny);

  int dim() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int i) const { return axes_[i]; }
  double dx(int i) const { return 2.0 * axes_[i].half_width / axes_[i].n; }
  double du(int i) const {
    return 3.14159265358979323846 / axes_[i].half_width;
  }
  double x(int i, int j) const {
    return axes_[i].center - axes_[i].half_width + j * dx(i);
  }
  double u(int i, int k) const { return (k - axes_[i].n / 2) * du(i); }

  // total number of grid points (product over axes)
  std::size_t size() const;
  // flattened index, row-major over axes
  std::size_t flat(int j0, int j1 = 0) const;

 private:
  std::vector<Axis> axes_;
};

namespace fft {
// In-place radix-2 complex FFT; sign = -1 forward, +1 inverse
// (unnormalized). Length must be a power of two. Summation order is
// fixed by the butterfly schedule, so results are run-to-run identical.
void transform(std::vector<std::complex<double>>& a, int sign);
}  // namespace fft

}  // namespace ets
