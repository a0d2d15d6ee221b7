#include "ets/density.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace ets {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// One inverse pass along `axis`: multiplies in the centered-grid phase,
// runs the unnormalized inverse FFT, leaves the (-1)^j and du/(2pi)
// factors to the caller.
void inverse_pass(std::vector<std::complex<double>>& data,
                  const GridSpec& grid, int axis) {
  const int n = grid.axis(axis).n;
  const double du = grid.du(axis);
  const double x0 = grid.axis(axis).center - grid.axis(axis).half_width;
  std::vector<std::complex<double>> phase(n);
  for (int k = 0; k < n; ++k) {
    // kernel e^{-i u x}: phase carries the left-edge offset x0
    const double ph = -(k - n / 2) * du * x0;
    phase[k] = {std::cos(ph), std::sin(ph)};
  }
  const int other = grid.dim() == 2 ? grid.axis(1 - axis).n : 1;
  std::vector<std::complex<double>> line(n);
  for (int o = 0; o < other; ++o) {
    for (int k = 0; k < n; ++k) {
      const std::size_t idx =
          grid.dim() == 1 ? k : (axis == 0 ? grid.flat(k, o) : grid.flat(o, k));
      line[k] = data[idx] * phase[k];
    }
    fft::transform(line, -1);
    for (int j = 0; j < n; ++j) {
      const std::size_t idx =
          grid.dim() == 1 ? j : (axis == 0 ? grid.flat(j, o) : grid.flat(o, j));
      data[idx] = line[j];
    }
  }
}

double trapezoid_weight(int j, int n) { return (j == 0 || j == n - 1) ? 0.5 : 1.0; }

DensityGrid finish_inversion(std::vector<std::complex<double>> data,
                             const GridSpec& grid,
                             const InversionOptions& opt) {
  for (int axis = 0; axis < grid.dim(); ++axis) inverse_pass(data, grid, axis);

  double scale = 1.0;
  for (int axis = 0; axis < grid.dim(); ++axis)
    scale *= grid.du(axis) / kTwoPi;

  DensityGrid out{grid, Eigen::ArrayXd(static_cast<Eigen::Index>(grid.size())),
                  0.0, 0.0, 0.0};
  double mass = 0.0, min_v = 0.0, max_im = 0.0;
  const int n0 = grid.axis(0).n;
  const int n1 = grid.dim() == 2 ? grid.axis(1).n : 1;
  double cell = grid.dx(0) * (grid.dim() == 2 ? grid.dx(1) : 1.0);
  for (int j0 = 0; j0 < n0; ++j0) {
    for (int j1 = 0; j1 < n1; ++j1) {
      const std::size_t idx = grid.flat(j0, j1);
      const double sign = ((j0 + j1) % 2 == 0) ? 1.0 : -1.0;
      const std::complex<double> v = scale * sign * data[idx];
      out.values[static_cast<Eigen::Index>(idx)] = v.real();
      max_im = std::max(max_im, std::abs(v.imag()));
      min_v = std::min(min_v, v.real());
      double w = trapezoid_weight(j0, n0);
      if (grid.dim() == 2) w *= trapezoid_weight(j1, n1);
      mass += w * v.real() * cell;
    }
  }
  out.mass = mass;
  out.min_value = min_v;
  out.max_imag = max_im;
  if (opt.check_mass && std::abs(mass - 1.0) > opt.tol_mass)
    throw MassDeficit("invert_cf: density mass deviates from 1");
  return out;
}

}  // namespace

DensityGrid invert_cf(const CfEvaluator& cf, const GridSpec& grid,
                      const InversionOptions& opt) {
  const int n0 = grid.axis(0).n;
  const int n1 = grid.dim() == 2 ? grid.axis(1).n : 1;
  std::vector<std::complex<double>> data(grid.size());
  double boundary_max = 0.0;
  Eigen::VectorXd u(grid.dim());
  for (int k0 = 0; k0 < n0; ++k0) {
    u[0] = grid.u(0, k0);
    for (int k1 = 0; k1 < n1; ++k1) {
      if (grid.dim() == 2) u[1] = grid.u(1, k1);
      const Complex v = cf(u);
      data[grid.flat(k0, k1)] = v;
      const bool boundary = k0 == 0 || k0 == n0 - 1 ||
                            (grid.dim() == 2 && (k1 == 0 || k1 == n1 - 1));
      if (boundary) boundary_max = std::max(boundary_max, std::abs(v));
    }
  }
  if (opt.check_aliasing && boundary_max > opt.aliasing_bound)
    throw AliasingSuspected("invert_cf: |cf| too large at Fourier boundary");
  return finish_inversion(std::move(data), grid, opt);
}

DensityGrid invert_tabulated(const Eigen::VectorXcd& cf_values,
                             const GridSpec& grid,
                             const InversionOptions& opt) {
  if (cf_values.size() != static_cast<Eigen::Index>(grid.size()))
    throw DomainError("invert_tabulated: value count does not match grid");
  std::vector<std::complex<double>> data(cf_values.data(),
                                         cf_values.data() + cf_values.size());
  return finish_inversion(std::move(data), grid, opt);
}

double ks_distance(const SampleBatch& batch, const DensityGrid& density,
                   int axis, double tol_coverage) {
  const GridSpec& grid = density.grid;
  if (axis < 0 || axis >= grid.dim() || axis >= batch.dim)
    throw IndexError("ks_distance: bad axis");

  // 1D marginal along `axis` (trapezoid over the other axis in 2D)
  const int n = grid.axis(axis).n;
  Eigen::ArrayXd marginal(n);
  if (grid.dim() == 1) {
    marginal = density.values;
  } else {
    const int m = grid.axis(1 - axis).n;
    const double d_other = grid.dx(1 - axis);
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int o = 0; o < m; ++o) {
        const std::size_t idx = axis == 0 ? grid.flat(j, o) : grid.flat(o, j);
        acc += trapezoid_weight(o, m) *
               density.values[static_cast<Eigen::Index>(idx)];
      }
      marginal[j] = acc * d_other;
    }
  }

  // CDF at grid points by cumulative trapezoid
  const double dx = grid.dx(axis);
  Eigen::ArrayXd cdf(n);
  cdf[0] = 0.0;
  for (int j = 1; j < n; ++j)
    cdf[j] = cdf[j - 1] + 0.5 * (marginal[j - 1] + marginal[j]) * dx;

  const double x_lo = grid.x(axis, 0);
  const double x_hi = grid.x(axis, n - 1);
  std::vector<double> xs(batch.count);
  int outside = 0;
  for (int i = 0; i < batch.count; ++i) {
    xs[i] = batch.values(i, axis);
    if (xs[i] < x_lo || xs[i] > x_hi) ++outside;
  }
  if (outside > tol_coverage * batch.count)
    throw CoverageError("ks_distance: too many samples outside the grid");
  std::sort(xs.begin(), xs.end());

  auto model_cdf = [&](double x) {
    if (x <= x_lo) return 0.0;
    if (x >= x_hi) return std::min(1.0, cdf[n - 1]);
    const double f = (x - x_lo) / dx;
    const int j = std::min(n - 2, static_cast<int>(f));
    const double t = f - j;
    return std::clamp(cdf[j] + t * (cdf[j + 1] - cdf[j]), 0.0, 1.0);
  };

  double d = 0.0;
  const double inv_n = 1.0 / batch.count;
  for (int i = 0; i < batch.count; ++i) {
    const double fm = model_cdf(xs[i]);
    d = std::max(d, std::abs((i + 1) * inv_n - fm));
    d = std::max(d, std::abs(i * inv_n - fm));
  }
  return d;
}

}  // namespace ets
