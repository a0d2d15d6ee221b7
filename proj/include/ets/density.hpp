#pragma once

#include <Eigen/Dense>
#include <functional>

#include "ets/charfn.hpp"
#include "ets/grid.hpp"
#include "ets/sampling.hpp"

namespace ets {

struct InversionOptions {
  double tol_mass = 1e-3;
  double tol_neg = 1e-6;
  // |cf| at the Fourier-grid boundary must be below this or inversion
  // refuses (AliasingSuspected). Disabled for tabulated fields whose
  // boundary behavior the caller owns (truncated series).
  double aliasing_bound = 1e-8;
  bool check_aliasing = true;
  bool check_mass = true;
};

// Real density values over a grid, with the trapezoid mass and the most
// negative excursion kept visible (never clipped away).
struct DensityGrid {
  GridSpec grid;
  Eigen::ArrayXd values;  // flattened row-major over axes
  double mass = 0.0;
  double min_value = 0.0;
  double max_imag = 0.0;  // residual imaginary part of the inversion
};

using CfEvaluator = std::function<Complex(const Eigen::VectorXd&)>;

// p(x) = (2 pi)^{-dim} sum_u e^{i<x,u>} cf(u) du, by FFT with the phase
// shift for the centered grid.
DensityGrid invert_cf(const CfEvaluator& cf, const GridSpec& grid,
                      const InversionOptions& opt = {});

// Same inversion for CF values already tabulated on the Fourier grid
// (flattened row-major), as produced by the fpde and series modules.
DensityGrid invert_tabulated(const Eigen::VectorXcd& cf_values,
                             const GridSpec& grid,
                             const InversionOptions& opt = {});

// Kolmogorov-Smirnov statistic between the empirical CDF of one sample
// coordinate and the CDF of the density's matching 1D marginal.
double ks_distance(const SampleBatch& batch, const DensityGrid& density,
                   int axis, double tol_coverage = 1e-3);

}  // namespace ets
