#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ets/density.hpp"
#include "ets/fpde.hpp"
#include "ets/grid.hpp"

namespace ets {

enum class SeriesMethod { HPM, ADM, VIM };

// Term sequence of one approximation method in Fourier space, at a fixed
// evaluation time t. All three methods produce V-hat_k = (t Lambda)^k / k!,
// but each arrives there through its own recurrence:
//   HPM: homotopy coefficient matching in powers of the embedding parameter;
//   ADM: the decomposition integral recurrence applied to each term;
//   VIM: the correction functional with Lagrange multiplier -1 applied to
//        the accumulated iterate, the new term being the iterate increment.
class SeriesState {
 public:
  SeriesState(SeriesMethod method, const GridSpec& grid,
              const GeneratorSymbol& g, double t);

  SeriesMethod method() const { return method_; }
  double time() const { return time_; }
  const GridSpec& grid() const { return grid_; }
  const std::vector<Eigen::VectorXcd>& terms() const { return terms_; }
  const Eigen::VectorXcd& partial_sum() const { return partial_sum_; }
  const Eigen::VectorXcd& symbol() const { return lambda_; }

  // Appends and returns V-hat_{k+1} evaluated at time t.
  const Eigen::VectorXcd& next_term();

  // max over grid of |z|^{N+1} e^{|z|} / (N+1)!, z = t Lambda(u):
  // pointwise exponential-Taylor remainder for the current partial sum.
  double remainder_bound() const;

 private:
  SeriesMethod method_;
  GridSpec grid_;
  double time_;
  Eigen::VectorXcd lambda_;
  std::vector<Eigen::VectorXcd> terms_;
  Eigen::VectorXcd partial_sum_;

  // HPM: monomial coefficient of the latest homotopy order.
  Eigen::VectorXcd hpm_coeff_;
  // ADM: latest term as a polynomial in t (monomial after each integral,
  // but kept as a full coefficient list and integrated generically).
  std::vector<Eigen::VectorXcd> adm_poly_;
  // VIM: the full iterate polynomial a_0 + a_1 t + ... + a_n t^n.
  std::vector<Eigen::VectorXcd> vim_poly_;

  Eigen::VectorXcd eval_poly(const std::vector<Eigen::VectorXcd>& poly) const;
};

// N-term state built by repeated next_term.
SeriesState series_partial_sum(const GeneratorSymbol& g, const GridSpec& grid,
                               double t, int n_terms, SeriesMethod method);

// Inverts the partial sum; refuses when the remainder bound exceeds
// max_remainder (TruncationTooCoarse).
DensityGrid series_density(const GeneratorSymbol& g, const GridSpec& grid,
                           double t, int n_terms, SeriesMethod method,
                           double max_remainder = 1e-8,
                           const InversionOptions& opt = {});

}  // namespace ets
