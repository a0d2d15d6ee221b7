#pragma once

#include <Eigen/Dense>

#include "ets/charfn.hpp"
#include "ets/errors.hpp"

namespace ets {

// Sigma = diag(sigma_vec) * corr * diag(sigma_vec), with the lower
// Cholesky factor of the correlation matrix alongside.
struct DispersionDecomposition {
  Eigen::VectorXd sigma_vec;
  Eigen::MatrixXd corr;
  Eigen::MatrixXd chol_corr;
};

// Lower-triangular Delta with positive diagonal and Delta*Delta' = Sigma.
// Throws NotPositiveDefinite when a pivot falls below 1e-13 times the
// largest diagonal entry.
Eigen::MatrixXd cholesky(const Eigen::MatrixXd& sigma);

DispersionDecomposition decompose(const Eigen::MatrixXd& sigma);

// Law-level linear transform: X' = Delta X has parameters
// mu' = Delta mu, Sigma' = Delta Sigma Delta', same (alpha, lambda).
EtsParams transform_law(const EtsParams& p, const Eigen::MatrixXd& delta);

}  // namespace ets
