#include "ets/charfn.hpp"

#include <cmath>

#include "ets/dispersion.hpp"
#include "ets/specfun.hpp"

namespace ets {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// exp with deterministic far-tail behavior: exponents below -700 map to
// exactly 0 instead of subnormal noise.
Complex cexp_safe(const Complex& z) {
  if (z.real() < -700.0) return {0.0, 0.0};
  return std::exp(z);
}

}  // namespace

void EtsParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("EtsParams: alpha must be in (0, 2)");
  if (!(lambda > 0.0)) throw DomainError("EtsParams: lambda must be > 0");
  if (sigma.rows() != mu.size() || sigma.cols() != mu.size())
    throw DomainError("EtsParams: sigma/mu dimension mismatch");
  cholesky(sigma);  // symmetry + positive definiteness
}

void SubordinatorParams::validate() const {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("SubordinatorParams: alpha must be in (0, 2)");
  if (!(theta > 0.0)) throw DomainError("SubordinatorParams: theta must be > 0");
}

Complex psi_alpha(double s, double alpha) {
  if (alpha == 1.0)
    throw PoleError("psi_alpha: Gamma((1-alpha)/2) pole at alpha = 1");
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("psi_alpha: alpha must be in (0, 2)");
  const double z = -0.5 * s * s;  // (i sqrt(2) s / 2)^2
  const double f1 = specfun::kummer_1f1(-alpha / 2.0, 0.5, z).value;
  const double f2 = specfun::kummer_1f1(0.5 - alpha / 2.0, 1.5, z).value;
  const double scale = std::pow(2.0, -alpha / 2.0 - 1.0);
  const double re = scale * specfun::gamma(-alpha / 2.0) * (f1 - 1.0);
  const double im =
      scale * kSqrt2 * s * specfun::gamma((1.0 - alpha) / 2.0) * (f2 - 1.0);
  return {re, im};
}

Complex psi_alpha0(double s, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("psi_alpha0: alpha must be in (0, 1)");
  const double z = -0.5 * s * s;
  const double f1 = specfun::kummer_1f1(-alpha / 2.0, 0.5, z).value;
  const double f2 = specfun::kummer_1f1(0.5 - alpha / 2.0, 1.5, z).value;
  const double scale = std::pow(2.0, -alpha / 2.0 - 1.0);
  const double re = scale * specfun::gamma(-alpha / 2.0) * (f1 - 1.0);
  const double im =
      scale * kSqrt2 * s * specfun::gamma((1.0 - alpha) / 2.0) * f2;
  return {re, im};
}

Complex tid_log_cf(const TidParams& p, const Eigen::VectorXd& u,
                   bool use_psi0) {
  if (u.size() != p.r.dim())
    throw DomainError("tid_cf: probe dimension mismatch");
  Complex acc{0.0, 0.0};
  for (const auto& a : p.r.atoms()) {
    const double s = u.dot(a.location);
    acc += a.weight * (use_psi0 ? psi_alpha0(s, p.alpha) : psi_alpha(s, p.alpha));
  }
  acc += Complex{0.0, u.dot(p.m)};
  return acc;
}

Complex tid_cf(const TidParams& p, const Eigen::VectorXd& u, bool use_psi0) {
  return cexp_safe(tid_log_cf(p, u, use_psi0));
}

double symmetric_tid_cf(const SpectralMeasure& r, double alpha,
                        const Eigen::VectorXd& u) {
  if (u.size() != r.dim())
    throw DomainError("symmetric_tid_cf: probe dimension mismatch");
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("symmetric_tid_cf: alpha must be in (0, 2)");
  // The symmetrized measure gives the same sum: the kernel depends on
  // <u, x> only through its square, so +x and -x contribute equally.
  double acc = 0.0;
  for (const auto& a : r.atoms()) {
    const double s = u.dot(a.location);
    acc += a.weight *
           (specfun::kummer_1f1(-alpha / 2.0, 0.5, -0.5 * s * s).value - 1.0);
  }
  const double expo =
      std::pow(2.0, -alpha / 2.0 - 1.0) * specfun::gamma(-alpha / 2.0) * acc;
  return expo < -700.0 ? 0.0 : std::exp(expo);
}

Complex ets_log_cf(const EtsParams& p, const Eigen::VectorXd& u) {
  if (u.size() != p.mu.size())
    throw DomainError("ets_cf: probe dimension mismatch");
  const double quad = u.dot(p.sigma * u);  // >= 0, so the base is >= 1
  const double re = 2.0 * p.lambda / p.alpha *
                    (1.0 - std::pow(1.0 + quad / (2.0 * p.lambda),
                                    p.alpha / 2.0));
  return {re, p.mu.dot(u)};
}

Complex ets_cf(const EtsParams& p, const Eigen::VectorXd& u) {
  return cexp_safe(ets_log_cf(p, u));
}

Complex subordinator_cf(const SubordinatorParams& p, double u) {
  const double c = 2.0 * std::pow(p.theta, 1.0 - p.alpha / 2.0) / p.alpha;
  const Complex base{p.theta, -u};  // right half-plane: principal branch safe
  const Complex z =
      -c * (std::pow(base, p.alpha / 2.0) - std::pow(p.theta, p.alpha / 2.0));
  return cexp_safe(z);
}

}  // namespace ets
