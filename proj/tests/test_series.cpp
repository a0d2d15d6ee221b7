#include "ets/series.hpp"

#include <cmath>

#include "doctest.h"

using namespace ets;

namespace {

// small-sigma ETS keeps |t Lambda| modest on a coarse grid, which is the
// regime where a 20-term series is meaningful
GeneratorSymbol small_ets_symbol() {
  return GeneratorSymbol::ets(EtsParams{0.5, 1.0, Eigen::VectorXd::Zero(1),
                                        0.04 * Eigen::MatrixXd::Identity(1, 1)});
}

GridSpec coarse_grid() { return GridSpec::make_1d(0.0, 10.0, 64); }

}  // namespace

TEST_CASE("term zero is the transform of the point mass") {
  for (auto method : {SeriesMethod::HPM, SeriesMethod::ADM, SeriesMethod::VIM}) {
    SeriesState s(method, coarse_grid(), small_ets_symbol(), 1.0);
    CHECK(s.terms().size() == 1);
    CHECK((s.terms()[0].array() - Complex(1.0, 0.0)).abs().maxCoeff() == 0.0);
  }
}

TEST_CASE("term one is t Lambda, term five is (t Lambda)^5 / 120") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  const double t = 0.8;
  const Eigen::VectorXcd lam = g.eval_grid(grid);
  for (auto method : {SeriesMethod::HPM, SeriesMethod::ADM, SeriesMethod::VIM}) {
    auto s = series_partial_sum(g, grid, t, 5, method);
    const Eigen::VectorXcd expected1 = t * lam;
    CHECK((s.terms()[1] - expected1).cwiseAbs().maxCoeff() <= 1e-15);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      const Complex z = t * lam[i];
      const Complex expected5 = z * z * z * z * z / 120.0;
      CHECK(std::abs(s.terms()[5][i] - expected5) <= 1e-14 * std::max(1.0, std::abs(expected5)));
    }
  }
}

TEST_CASE("closed form of every term: (t Lambda)^k / k!") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  const double t = 1.0;
  const Eigen::VectorXcd lam = g.eval_grid(grid);
  for (auto method : {SeriesMethod::HPM, SeriesMethod::ADM, SeriesMethod::VIM}) {
    auto s = series_partial_sum(g, grid, t, 12, method);
    for (int k = 0; k <= 12; ++k) {
      double fact = 1.0;
      for (int j = 2; j <= k; ++j) fact *= j;
      for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const Complex expected = std::pow(t * lam[i], k) / fact;
        CHECK(std::abs(s.terms()[k][i] - expected) <=
              1e-14 * std::max(1.0, std::abs(expected)));
      }
    }
  }
}

TEST_CASE("three methods agree term by term") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  auto hpm = series_partial_sum(g, grid, 1.0, 20, SeriesMethod::HPM);
  auto adm = series_partial_sum(g, grid, 1.0, 20, SeriesMethod::ADM);
  auto vim = series_partial_sum(g, grid, 1.0, 20, SeriesMethod::VIM);
  for (int k = 0; k <= 20; ++k) {
    CHECK((hpm.terms()[k] - adm.terms()[k]).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((hpm.terms()[k] - vim.terms()[k]).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("partial sum converges to exp(t Lambda)") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  const Eigen::VectorXcd lam = g.eval_grid(grid);
  auto s = series_partial_sum(g, grid, 1.0, 20, SeriesMethod::ADM);
  // |t Lambda| <= 5 over this grid by construction
  CHECK(lam.cwiseAbs().maxCoeff() <= 5.0);
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    const Complex exact = std::exp(lam[i]);
    CHECK(std::abs(s.partial_sum()[i] - exact) / std::abs(exact) <= 1e-10);
  }
}

TEST_CASE("one-term sum and monotone improvement") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  const Eigen::VectorXcd lam = g.eval_grid(grid);
  auto s = series_partial_sum(g, grid, 0.15, 1, SeriesMethod::HPM);
  CHECK((s.partial_sum() -
         (Eigen::VectorXcd::Ones(lam.size()) + 0.15 * lam))
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  // with |t Lambda| <= 1 the sup error is non-increasing from N = 2 on
  const double t = 1.0 / lam.cwiseAbs().maxCoeff();
  SeriesState state(SeriesMethod::VIM, grid, g, t);
  double prev_err = 1e300;
  for (int n = 1; n <= 12; ++n) {
    state.next_term();
    double err = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      err = std::max(err, std::abs(state.partial_sum()[i] - std::exp(t * lam[i])));
    if (n >= 2) CHECK(err <= prev_err + 1e-18);
    prev_err = err;
  }
}

TEST_CASE("remainder bound is a true pointwise bound") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  const Eigen::VectorXcd lam = g.eval_grid(grid);
  auto s = series_partial_sum(g, grid, 1.0, 10, SeriesMethod::ADM);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    worst = std::max(worst, std::abs(s.partial_sum()[i] - std::exp(lam[i])));
  CHECK(worst <= s.remainder_bound());
}

TEST_CASE("series density: delta spike at N = 0, mass 1 at N = 20") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  // N = 0: the partial sum is the constant 1, a discrete delta
  SeriesState s0(SeriesMethod::HPM, grid, g, 1.0);
  InversionOptions opt;
  opt.check_mass = false;
  const auto spike = invert_tabulated(s0.partial_sum(), grid, opt);
  Eigen::Index argmax = 0;
  spike.values.maxCoeff(&argmax);
  CHECK(argmax == 32);  // center cell of the 64-point grid
  // all mass in the center cell: neighbors are at numerical zero
  CHECK(std::abs(spike.values[31]) <= 1e-10 * spike.values[32]);

  const auto d = series_density(g, grid, 1.0, 20, SeriesMethod::ADM);
  CHECK(std::abs(d.mass - 1.0) <= 1e-3);
}

TEST_CASE("series density matches the fpde density") {
  const auto g = small_ets_symbol();
  const auto grid = coarse_grid();
  auto s = series_partial_sum(g, grid, 1.0, 20, SeriesMethod::VIM);
  const double remainder = s.remainder_bound();
  REQUIRE(remainder <= 1e-8);
  const auto from_series =
      series_density(g, grid, 1.0, 20, SeriesMethod::VIM);
  const auto from_pde = density_at_time(g, grid, 1.0, 1e-3);
  CHECK((from_series.values - from_pde.values).abs().maxCoeff() <=
        1e-6 + remainder);
}

TEST_CASE("truncation guard") {
  // larger sigma pushes |t Lambda| beyond what 3 terms can represent
  const auto g = GeneratorSymbol::ets(EtsParams{
      1.2, 1.0, Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Identity(1, 1)});
  CHECK_THROWS_AS(
      series_density(g, GridSpec::make_1d(0.0, 10.0, 64), 1.0, 3,
                     SeriesMethod::ADM),
      TruncationTooCoarse);
}
