#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ets/errors.hpp"
#include "ets/measures.hpp"

namespace ets {

using Complex = std::complex<double>;

// Parameters of the elliptical tempered stable law:
// stability index alpha, tempering scale lambda, location mu,
// symmetric positive-definite dispersion sigma.
struct EtsParams {
  double alpha;
  double lambda;
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;

  int dim() const { return static_cast<int>(mu.size()); }
  void validate() const;
};

// Tempered stable subordinator parameters (alpha, theta); unit mean
// under this normalization.
struct SubordinatorParams {
  double alpha;
  double theta;

  void validate() const;
};

// TID law: stability index, spectral measure, location vector.
struct TidParams {
  double alpha;
  SpectralMeasure r;
  Eigen::VectorXd m;
};

// Scalar CF kernel psi_alpha(s), alpha in (0,2) \ {1}:
//   2^{-a/2-1} [ Gamma(-a/2)      (1F1(-a/2,   1/2; -s^2/2) - 1)
//        + i sqrt(2) s Gamma((1-a)/2) (1F1(1/2-a/2, 3/2; -s^2/2) - 1) ]
Complex psi_alpha(double s, double alpha);

// Alternative kernel for alpha in (0,1): second hypergeometric term
// enters without the "-1" shift.
Complex psi_alpha0(double s, double alpha);

// General TID characteristic function
//   exp( sum_j w_j psi(<u, x_j>) + i <u, m> )
// with psi = psi_alpha, or psi_alpha0 when use_psi0 is set (then m plays
// the role of the alternative-form location m0).
Complex tid_cf(const TidParams& p, const Eigen::VectorXd& u,
               bool use_psi0 = false);

// Symmetric TID CF: real-valued
//   exp( 2^{-a/2-1} Gamma(-a/2) sum_j w_j (1F1(-a/2, 1/2; -<u,x_j>^2/2) - 1) )
// The measure is symmetrized internally when handed an asymmetric one.
double symmetric_tid_cf(const SpectralMeasure& r, double alpha,
                        const Eigen::VectorXd& u);

// ETS characteristic function
//   exp( (2 lambda/alpha)(1 - (1 + u'Sigma u/(2 lambda))^{alpha/2}) + i mu'u )
Complex ets_cf(const EtsParams& p, const Eigen::VectorXd& u);

// Tempered stable subordinator CF
//   exp( -(2 theta^{1-alpha/2}/alpha) ((theta - iu)^{alpha/2} - theta^{alpha/2}) )
Complex subordinator_cf(const SubordinatorParams& p, double u);

// Exponent (log CF) forms; shared with the fpde symbol evaluation.
Complex tid_log_cf(const TidParams& p, const Eigen::VectorXd& u,
                   bool use_psi0 = false);
Complex ets_log_cf(const EtsParams& p, const Eigen::VectorXd& u);

}  // namespace ets
