#include "ets/dispersion.hpp"

#include <cmath>

namespace ets {

Eigen::MatrixXd cholesky(const Eigen::MatrixXd& sigma) {
  const auto n = sigma.rows();
  if (sigma.cols() != n) throw DomainError("cholesky: matrix is not square");
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("cholesky: matrix is not symmetric");

  const double pivot_floor = 1e-13 * sigma.diagonal().maxCoeff();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = sigma(j, j) - l.row(j).head(j).squaredNorm();
    if (d <= pivot_floor)
      throw NotPositiveDefinite("cholesky: pivot below threshold");
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      l(i, j) =
          (sigma(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
    }
  }
  return l;
}

DispersionDecomposition decompose(const Eigen::MatrixXd& sigma) {
  cholesky(sigma);  // reject non-SPD input up front
  DispersionDecomposition d;
  d.sigma_vec = sigma.diagonal().cwiseSqrt();
  Eigen::VectorXd inv = d.sigma_vec.cwiseInverse();
  d.corr = inv.asDiagonal() * sigma * inv.asDiagonal();
  d.corr.diagonal().setOnes();
  d.chol_corr = cholesky(d.corr);
  return d;
}

EtsParams transform_law(const EtsParams& p, const Eigen::MatrixXd& delta) {
  if (delta.rows() != p.dim() || delta.cols() != p.dim())
    throw DomainError("transform_law: dimension mismatch");
  if (delta.diagonal().cwiseAbs().minCoeff() <= 1e-13)
    throw SingularTransform("transform_law: near-zero diagonal entry");
  EtsParams out = p;
  out.mu = delta * p.mu;
  out.sigma = delta * p.sigma * delta.transpose();
  return out;
}

}  // namespace ets
