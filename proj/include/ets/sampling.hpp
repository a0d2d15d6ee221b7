#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "ets/charfn.hpp"
#include "ets/rng.hpp"

namespace ets {

// Immutable batch of i.i.d. samples, one row per draw.
struct SampleBatch {
  int dim = 0;
  int count = 0;
  Eigen::MatrixXd values;          // count x dim
  std::uint64_t params_digest = 0;

  void validate() const;
};

// FNV-1a content hash over a canonical byte string.
std::uint64_t digest_bytes(const std::string& bytes);
std::uint64_t digest_params(const EtsParams& p);
std::uint64_t digest_params(const SubordinatorParams& p);

// One-sided stable variates with Laplace transform E e^{-v S} = e^{-v^index},
// index in (0, 1), by Kanter's representation.
Eigen::VectorXd sample_positive_stable(RngState rng, double index, int count);

// Tempered stable subordinator variates matching subordinator_cf, by
// exponential-tilting rejection on a scaled positive stable draw.
// acceptance_rate, when non-null, receives the analytic rate e^{-2 theta/alpha}.
// Throws BudgetExceeded when the expected number of proposals per sample
// exceeds max_work_per_sample.
Eigen::VectorXd sample_tempered_subordinator(RngState rng,
                                             const SubordinatorParams& p,
                                             int count,
                                             double* acceptance_rate = nullptr,
                                             double max_work_per_sample = 1e4);

// ETS vectors via subordination: X = mu + sqrt(T) * chol(Sigma) * Z with
// T a tempered subordinator draw at (alpha, theta = lambda).
SampleBatch sample_ets(RngState rng, const EtsParams& p, int count);

// Row-wise linear transform x -> Delta x.
SampleBatch transform_samples(const SampleBatch& batch,
                              const Eigen::MatrixXd& delta);

}  // namespace ets
