#include "ets/fpde.hpp"

#include <cmath>

namespace ets {

GeneratorSymbol::GeneratorSymbol(Kind kind, TidParams tid, EtsParams ets)
    : kind_(kind),
      tid_(std::make_shared<const TidParams>(std::move(tid))),
      ets_(std::make_shared<const EtsParams>(std::move(ets))) {}

GeneratorSymbol GeneratorSymbol::tid(TidParams params) {
  return GeneratorSymbol(Kind::TidPsi, std::move(params),
                         EtsParams{0.5, 1.0, Eigen::VectorXd::Zero(1),
                                   Eigen::MatrixXd::Identity(1, 1)});
}

GeneratorSymbol GeneratorSymbol::tid_psi0(TidParams params) {
  if (!(params.alpha > 0.0 && params.alpha < 1.0))
    throw DomainError("GeneratorSymbol: psi0 kernel needs alpha in (0, 1)");
  return GeneratorSymbol(Kind::TidPsi0, std::move(params),
                         EtsParams{0.5, 1.0, Eigen::VectorXd::Zero(1),
                                   Eigen::MatrixXd::Identity(1, 1)});
}

GeneratorSymbol GeneratorSymbol::ets(EtsParams params) {
  params.validate();
  return GeneratorSymbol(
      Kind::Ets,
      TidParams{0.5, SpectralMeasure(1, {{Eigen::VectorXd::Ones(1), 1.0}}),
                Eigen::VectorXd::Zero(1)},
      std::move(params));
}

int GeneratorSymbol::dim() const {
  return kind_ == Kind::Ets ? ets_->dim() : tid_->r.dim();
}

const TidParams& GeneratorSymbol::tid_params() const { return *tid_; }
const EtsParams& GeneratorSymbol::ets_params() const { return *ets_; }

Complex GeneratorSymbol::eval(const Eigen::VectorXd& u) const {
  switch (kind_) {
    case Kind::TidPsi:
      return tid_log_cf(*tid_, u, /*use_psi0=*/false);
    case Kind::TidPsi0:
      return tid_log_cf(*tid_, u, /*use_psi0=*/true);
    case Kind::Ets:
      return ets_log_cf(*ets_, u);
  }
  throw Error("GeneratorSymbol: unreachable");
}

Eigen::VectorXcd GeneratorSymbol::eval_grid(const GridSpec& grid) const {
  if (grid.dim() != dim())
    throw DomainError("GeneratorSymbol: grid dimension mismatch");
  Eigen::VectorXcd out(static_cast<Eigen::Index>(grid.size()));
  const int n0 = grid.axis(0).n;
  const int n1 = grid.dim() == 2 ? grid.axis(1).n : 1;
  Eigen::VectorXd u(grid.dim());
  for (int k0 = 0; k0 < n0; ++k0) {
    u[0] = grid.u(0, k0);
    for (int k1 = 0; k1 < n1; ++k1) {
      if (grid.dim() == 2) u[1] = grid.u(1, k1);
      out[static_cast<Eigen::Index>(grid.flat(k0, k1))] = eval(u);
    }
  }
  return out;
}

FourierField initial_field(const GridSpec& grid) {
  return {grid,
          Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(grid.size())), 0.0};
}

FourierField step_rk4(const FourierField& field,
                      const Eigen::VectorXcd& lambda, double dt) {
  if (lambda.size() != field.values.size())
    throw DomainError("step_rk4: symbol/field size mismatch");
  if (!(dt > 0.0)) throw DomainError("step_rk4: dt must be > 0");
  const double lam_max = lambda.cwiseAbs().maxCoeff();
  if (lam_max > 0.0 && dt > 2.7 / lam_max)
    throw StabilityViolation("step_rk4: dt exceeds 2.7/max|Lambda|");

  FourierField out = field;
  for (Eigen::Index i = 0; i < field.values.size(); ++i) {
    const Complex lam = lambda[i];
    const Complex y = field.values[i];
    const Complex k1 = lam * y;
    const Complex k2 = lam * (y + 0.5 * dt * k1);
    const Complex k3 = lam * (y + 0.5 * dt * k2);
    const Complex k4 = lam * (y + dt * k3);
    out.values[i] = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  out.time = field.time + dt;
  return out;
}

FourierField step_rk4(const FourierField& field, const GeneratorSymbol& g,
                      double dt) {
  return step_rk4(field, g.eval_grid(field.grid), dt);
}

FourierField solve(const GeneratorSymbol& g, const GridSpec& grid,
                   double t_end, double dt) {
  if (!(t_end > 0.0)) throw DomainError("solve: t_end must be > 0");
  if (!(dt > 0.0)) throw DomainError("solve: dt must be > 0");
  const Eigen::VectorXcd lambda = g.eval_grid(grid);
  const int steps = std::max(1, static_cast<int>(std::ceil(t_end / dt - 1e-12)));
  const double h = t_end / steps;
  FourierField field = initial_field(grid);
  for (int s = 0; s < steps; ++s) field = step_rk4(field, lambda, h);
  field.time = t_end;  // avoid accumulated rounding in the time stamp
  return field;
}

DensityGrid density_at_time(const GeneratorSymbol& g, const GridSpec& grid,
                            double t, double dt, const InversionOptions& opt) {
  const FourierField field = solve(g, grid, t, dt);
  return invert_tabulated(field.values, grid, opt);
}

}  // namespace ets
