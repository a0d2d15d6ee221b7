#pragma once

#include <Eigen/Dense>
#include <memory>

#include "ets/charfn.hpp"
#include "ets/density.hpp"
#include "ets/grid.hpp"

namespace ets {

// Fourier multiplier of the evolution equation: the operator is diagonal
// in Fourier space, so the generator is the scalar Lambda(u) per mode.
class GeneratorSymbol {
 public:
  enum class Kind { TidPsi, TidPsi0, Ets };

  static GeneratorSymbol tid(TidParams params);       // psi_alpha kernel
  static GeneratorSymbol tid_psi0(TidParams params);  // alternative kernel
  static GeneratorSymbol ets(EtsParams params);

  Kind kind() const { return kind_; }
  int dim() const;
  const TidParams& tid_params() const;
  const EtsParams& ets_params() const;

  // Lambda(u): i<m,u> plus the tempered-stable integral term; equals the
  // log-CF of the law at t = 1.
  Complex eval(const Eigen::VectorXd& u) const;

  // Lambda tabulated over the Fourier grid, flattened row-major.
  Eigen::VectorXcd eval_grid(const GridSpec& grid) const;

 private:
  GeneratorSymbol(Kind kind, TidParams tid, EtsParams ets);
  Kind kind_;
  std::shared_ptr<const TidParams> tid_;
  std::shared_ptr<const EtsParams> ets_;
};

// Complex field over a Fourier grid at a point in time; P-hat(u, t).
struct FourierField {
  GridSpec grid;
  Eigen::VectorXcd values;
  double time = 0.0;
};

// P-hat(u, 0) = 1, the transform of a point mass at the origin.
FourierField initial_field(const GridSpec& grid);

// One RK4 step of y' = Lambda(u) y per mode. dt must not exceed
// 2.7 / max|Lambda| over the grid.
FourierField step_rk4(const FourierField& field, const GeneratorSymbol& g,
                      double dt);
FourierField step_rk4(const FourierField& field,
                      const Eigen::VectorXcd& lambda, double dt);

// Repeated RK4 from the delta initial condition to t_end. The number of
// steps is ceil(t_end/dt); the step actually used divides t_end exactly.
FourierField solve(const GeneratorSymbol& g, const GridSpec& grid,
                   double t_end, double dt);

// solve composed with Fourier inversion: the density of the law at time t.
DensityGrid density_at_time(const GeneratorSymbol& g, const GridSpec& grid,
                            double t, double dt,
                            const InversionOptions& opt = {});

}  // namespace ets
