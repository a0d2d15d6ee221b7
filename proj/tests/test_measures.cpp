#include "ets/measures.hpp"

#include <cmath>

#include "doctest.h"
#include "ets/specfun.hpp"

using namespace ets;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

TemperingFamily two_direction_family() {
  Eigen::VectorXd e1 = vec2(1.0, 0.0);
  Eigen::VectorXd d2 = vec2(0.6, 0.8);
  return TemperingFamily(
      2, {{e1, {{1.0, 0.5}, {2.0, 1.5}}}, {d2, {{0.7, 2.0}}}});
}

}  // namespace

TEST_CASE("measure invariants enforced") {
  CHECK_THROWS_AS(SpectralMeasure(2, {{vec2(0, 0), 1.0}}), DomainError);
  CHECK_THROWS_AS(SpectralMeasure(2, {{vec2(1, 0), -1.0}}), DomainError);
  CHECK_THROWS_AS(SpectralMeasure(2, {{vec2(1, 0), 0.0}}), DomainError);
  const SpectralMeasure m(2, {{vec2(1, 0), 2.0}, {vec2(0, 3), 0.5}});
  CHECK(std::isfinite(m.integrability_mass(1.3)));
}

TEST_CASE("direction normalization tolerance") {
  // within 1e-9 of unit norm: accepted and renormalized
  Eigen::VectorXd near_unit = vec2(1.0 + 5e-10, 0.0);
  TemperingFamily ok(2, {{near_unit, {{1.0, 1.0}}}});
  CHECK(ok.entries()[0].direction.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(TemperingFamily(2, {{vec2(1.1, 0.0), {{1.0, 1.0}}}}),
                  DomainError);
}

TEST_CASE("tempering_q_exp direct substitution") {
  TemperingFamily fam(2, {{vec2(1, 0), {{2.0, 3.0}}}});
  CHECK(tempering_q_exp(fam, 1e-12, 0) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(tempering_q_exp(fam, 1.0, 0) ==
        doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(tempering_q_exp(fam, 1.0, 5), IndexError);
}

TEST_CASE("tempering_q_exp two atoms vs finite-sum oracle") {
  TemperingFamily fam(2, {{vec2(1, 0), {{1.0, 0.5}, {3.0, 2.0}}}});
  const double r = 0.7;
  const double oracle = 0.5 * std::exp(-r * 1.0) + 2.0 * std::exp(-r * 3.0);
  CHECK(tempering_q_exp(fam, r, 0) == doctest::Approx(oracle).epsilon(1e-15));
}

TEST_CASE("tempering_q_gauss direct substitution") {
  TemperingFamily fam(2, {{vec2(1, 0), {{2.0, 1.0}}}});
  CHECK(tempering_q_gauss(fam, 1e-12, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tempering_q_gauss(fam, 1.0, 0) ==
        doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
}

TEST_CASE("tempering_q_gauss completely monotone in r^2") {
  TemperingFamily fam(2, {{vec2(1, 0), {{1.0, 1.0}, {2.0, 0.5}}}});
  // sample q as a function of v = r^2 on a grid; first differences negative,
  // second differences positive
  auto q_of_v = [&](double v) {
    return tempering_q_gauss(fam, std::sqrt(v), 0);
  };
  const double v0 = 0.2, h = 0.3;
  const double d1 = q_of_v(v0 + h) - q_of_v(v0);
  const double d2 = q_of_v(v0 + 2 * h) - q_of_v(v0 + h);
  CHECK(d1 < 0.0);
  CHECK(d2 < 0.0);
  CHECK(d2 - d1 > 0.0);
}

TEST_CASE("build_r_from_q fixed point at s=1") {
  TemperingFamily fam(2, {{vec2(1, 0), {{1.0, 0.7}}}});
  const auto r = build_r_from_q(fam, 1.5);
  REQUIRE(r.size() == 1);
  CHECK((r.atoms()[0].location - vec2(1, 0)).norm() <= 1e-15);
  CHECK(r.atoms()[0].weight == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("build_r_from_q direct substitution") {
  TemperingFamily fam(2, {{vec2(1, 0), {{2.0, 1.0}}}});
  const auto r = build_r_from_q(fam, 1.5);
  REQUIRE(r.size() == 1);
  CHECK((r.atoms()[0].location - vec2(0.5, 0)).norm() <= 1e-15);
  CHECK(r.atoms()[0].weight ==
        doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-15));
}

TEST_CASE("build_r_from_q vs brute-force enumeration oracle") {
  const auto fam = two_direction_family();
  const double alpha = 1.2;
  const auto r = build_r_from_q(fam, alpha);

  // enumerate every Q atom independently and locate its image
  std::size_t matched = 0;
  for (const auto& e : fam.entries()) {
    for (const auto& ra : e.radial_atoms) {
      const Eigen::VectorXd loc = e.direction / ra.s;
      const double w = std::pow(ra.s, alpha) * ra.mass;
      for (const auto& atom : r.atoms()) {
        if ((atom.location - loc).norm() <= 1e-12) {
          CHECK(atom.weight == doctest::Approx(w).epsilon(1e-14));
          ++matched;
        }
      }
    }
  }
  CHECK(matched == 3);
}

TEST_CASE("symmetrize definition and fixed point") {
  const SpectralMeasure single(2, {{vec2(1, 2), 2.0}});
  const auto sym = symmetrize(single);
  REQUIRE(sym.size() == 2);
  CHECK(sym.atoms()[0].weight == doctest::Approx(1.0));
  CHECK(sym.atoms()[1].weight == doctest::Approx(1.0));

  const SpectralMeasure pair(2, {{vec2(1, 2), 1.0}, {vec2(-1, -2), 1.0}});
  const auto sym2 = symmetrize(pair);
  CHECK(sym2.size() == 2);
  CHECK(sym2.total_mass() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("symmetrize is idempotent and mass preserving") {
  const SpectralMeasure m(2, {{vec2(0.3, -1.2), 0.4},
                              {vec2(2.0, 0.1), 1.1},
                              {vec2(-0.5, 0.5), 0.25},
                              {vec2(1.0, 1.0), 0.8},
                              {vec2(-1.0, 2.0), 0.33}});
  const auto s1 = symmetrize(m);
  const auto s2 = symmetrize(s1);
  CHECK(s1.total_mass() == doctest::Approx(m.total_mass()).epsilon(1e-15));
  REQUIRE(s2.size() == s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < s2.size(); ++j) {
      if ((s1.atoms()[i].location - s2.atoms()[j].location).norm() <= 1e-12 &&
          std::abs(s1.atoms()[i].weight - s2.atoms()[j].weight) <= 1e-14)
        found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("levy_tail_mass against incomplete gamma and quadrature") {
  const SpectralMeasure m(2, {{vec2(1, 0), 1.0}});
  const double alpha = 0.5;
  CHECK(levy_tail_mass(m, alpha, 0, 1.0) ==
        doctest::Approx(specfun::upper_incomplete_gamma(-0.5, 1.0))
            .epsilon(1e-14));
  // tail vanishes and is monotone decreasing in r0
  CHECK(levy_tail_mass(m, alpha, 0, 200.0) <= 1e-80);
  double prev = levy_tail_mass(m, alpha, 0, 0.5);
  for (double r0 : {1.0, 2.0, 4.0}) {
    const double v = levy_tail_mass(m, alpha, 0, r0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(levy_tail_mass(m, alpha, 3, 1.0), IndexError);
}

TEST_CASE("levy tail additivity over radial intervals") {
  const SpectralMeasure m(2, {{vec2(1, 0), 1.3}});
  const double alpha = 0.5;
  const double eps = 0.1, r0 = 1.0;
  // integral of t^{-alpha-1} e^{-t} over (eps, r0) by Simpson
  auto f = [&](double t) { return std::pow(t, -alpha - 1.0) * std::exp(-t); };
  const int n = 200000;
  const double h = (r0 - eps) / n;
  double acc = f(eps) + f(r0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(eps + i * h);
  const double inner = 1.3 * acc * h / 3.0;
  CHECK(levy_tail_mass(m, alpha, 0, r0) + inner ==
        doctest::Approx(levy_tail_mass(m, alpha, 0, eps)).epsilon(1e-8));
}
