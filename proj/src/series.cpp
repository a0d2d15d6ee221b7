#include "ets/series.hpp"

#include <cmath>

namespace ets {

namespace {

constexpr int kMaxTerms = 64;

// log((N+1)!) via lgamma, for the remainder bound
double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

SeriesState::SeriesState(SeriesMethod method, const GridSpec& grid,
                         const GeneratorSymbol& g, double t)
    : method_(method),
      grid_(grid),
      time_(t),
      lambda_(g.eval_grid(grid)),
      partial_sum_(Eigen::VectorXcd::Ones(lambda_.size())) {
  if (!(t > 0.0)) throw DomainError("SeriesState: t must be > 0");
  // V_0 = delta(X) transforms to the constant field 1
  terms_.push_back(Eigen::VectorXcd::Ones(lambda_.size()));
  switch (method_) {
    case SeriesMethod::HPM:
      hpm_coeff_ = terms_[0];
      break;
    case SeriesMethod::ADM:
      adm_poly_ = {terms_[0]};
      break;
    case SeriesMethod::VIM:
      vim_poly_ = {terms_[0]};
      break;
  }
}

Eigen::VectorXcd SeriesState::eval_poly(
    const std::vector<Eigen::VectorXcd>& poly) const {
  // Horner in t over coefficient fields
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(lambda_.size());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = time_ * acc + *it;
  return acc;
}

const Eigen::VectorXcd& SeriesState::next_term() {
  const int k = static_cast<int>(terms_.size());  // appending term index k
  if (k > kMaxTerms) throw OverflowError("SeriesState: term cap exceeded");

  Eigen::VectorXcd term;
  switch (method_) {
    case SeriesMethod::HPM: {
      // Matching powers of the homotopy parameter gives
      // dV_k/dt = Lambda V_{k-1}; with V_{k-1} = c t^{k-1} this integrates
      // to the monomial (Lambda c / k) t^k.
      hpm_coeff_ = (lambda_.array() * hpm_coeff_.array() / double(k)).matrix();
      term = hpm_coeff_ * std::pow(time_, k);
      break;
    }
    case SeriesMethod::ADM: {
      // V_k = int_0^t Lambda V_{k-1}(s) ds, integrated coefficientwise.
      std::vector<Eigen::VectorXcd> next(adm_poly_.size() + 1);
      next[0] = Eigen::VectorXcd::Zero(lambda_.size());
      for (std::size_t d = 0; d < adm_poly_.size(); ++d)
        next[d + 1] =
            (lambda_.array() * adm_poly_[d].array() / double(d + 1)).matrix();
      adm_poly_ = std::move(next);
      term = eval_poly(adm_poly_);
      break;
    }
    case SeriesMethod::VIM: {
      // Correction functional with multiplier -1:
      // V_{n+1}(t) = V_n(t) - int_0^t (V_n'(s) - Lambda V_n(s)) ds
      //            = V_n(0) + int_0^t Lambda V_n(s) ds.
      std::vector<Eigen::VectorXcd> next(vim_poly_.size() + 1);
      next[0] = vim_poly_[0];  // V_n(0)
      for (std::size_t d = 0; d < vim_poly_.size(); ++d)
        next[d + 1] =
            (lambda_.array() * vim_poly_[d].array() / double(d + 1)).matrix();
      const Eigen::VectorXcd prev = eval_poly(vim_poly_);
      vim_poly_ = std::move(next);
      term = eval_poly(vim_poly_) - prev;
      break;
    }
  }

  if (!term.allFinite())
    throw OverflowError("SeriesState: term left the representable range");
  terms_.push_back(std::move(term));
  partial_sum_ += terms_.back();
  return terms_.back();
}

double SeriesState::remainder_bound() const {
  const int n = static_cast<int>(terms_.size()) - 1;  // highest power present
  double worst = 0.0;
  for (Eigen::Index i = 0; i < lambda_.size(); ++i) {
    const double z = std::abs(time_ * lambda_[i]);
    if (z == 0.0) continue;
    const double log_r = (n + 1) * std::log(z) + z - log_factorial(n + 1);
    worst = std::max(worst, log_r > 700.0 ? 1e300 : std::exp(log_r));
  }
  return worst;
}

SeriesState series_partial_sum(const GeneratorSymbol& g, const GridSpec& grid,
                               double t, int n_terms, SeriesMethod method) {
  if (n_terms < 1) throw DomainError("series_partial_sum: n_terms must be >= 1");
  SeriesState state(method, grid, g, t);
  for (int k = 0; k < n_terms; ++k) state.next_term();
  return state;
}

DensityGrid series_density(const GeneratorSymbol& g, const GridSpec& grid,
                           double t, int n_terms, SeriesMethod method,
                           double max_remainder, const InversionOptions& opt) {
  SeriesState state = series_partial_sum(g, grid, t, n_terms, method);
  if (state.remainder_bound() > max_remainder)
    throw TruncationTooCoarse(
        "series_density: truncation remainder above requested bound");
  return invert_tabulated(state.partial_sum(), grid, opt);
}

}  // namespace ets
