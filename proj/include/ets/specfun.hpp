#pragma once

#include "ets/errors.hpp"

namespace ets::specfun {

// Result of a series evaluation together with a cheap error estimate
// (magnitude of the last term added).
struct SpecFunResult {
  double value = 0.0;
  double est_error = 0.0;
  int terms_used = 1;
};

// Gamma function for real x, x not a non-positive integer.
// Lanczos approximation for x >= 0.5, reflection formula below.
// Relative error <= 1e-13 for |x| <= 50.
double gamma(double x);

// Upper incomplete Gamma function Gamma(a, x) = \int_x^\infty t^{a-1} e^{-t} dt
// for a in (-2, 2) and x > 0. Negative a is lifted into (0, 1] by the
// recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a.
double upper_incomplete_gamma(double a, double x);

// Kummer confluent hypergeometric function 1F1(a, b; z) for z <= 0.
// Evaluated through the Kummer transformation
//   1F1(a, b; z) = e^z 1F1(b - a, b; -z)
// so the series that is actually summed has non-negative argument.
// Callers in this library only need b in {1/2, 3/2}.
SpecFunResult kummer_1f1(double a, double b, double z);

}  // namespace ets::specfun
