#include "ets/specfun.hpp"

#include <cmath>

namespace ets::specfun {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

double gamma_positive(double x) {
  // x >= 0.5
  const double g = 7.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  double t = x - 0.5 + g;
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

// Exponential integral E1(x) = Gamma(0, x), x > 0.
double expint_e1(double x) {
  if (x <= 1.0) {
    // power series: E1(x) = -gamma - ln x + sum (-1)^{n+1} x^n / (n n!)
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int n = 1; n <= 60; ++n) {
      term *= -x / n;
      sum -= term / n;
      if (std::abs(term / n) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  // Lentz continued fraction for Gamma(0, x).
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x) * h;
}

// Gamma(a, x) for a in (0, 2], x > 0 by series / continued fraction.
double upper_gamma_positive(double a, double x) {
  if (x < a + 1.0) {
    // lower-incomplete series, then complement
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    double lower = sum * std::exp(-x + a * std::log(x));
    return gamma(a) - lower;
  }
  // Lentz continued fraction for Q(a, x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer x");
  }
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
  }
  return gamma_positive(x);
}

double upper_incomplete_gamma(double a, double x) {
  if (!(x > 0.0)) {
    throw DomainError("upper_incomplete_gamma: requires x > 0");
  }
  if (!(a > -2.0 && a < 2.0)) {
    throw DomainError("upper_incomplete_gamma: requires a in (-2, 2)");
  }
  if (a > 0.0) return upper_gamma_positive(a, x);
  if (a == 0.0) return expint_e1(x);
  // lift a into (0, 1] (or hit the a = 0 exponential-integral case):
  // Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a
  double up = upper_incomplete_gamma(a + 1.0, x);
  return (up - std::exp(a * std::log(x) - x)) / a;
}

SpecFunResult kummer_1f1(double a, double b, double z) {
  if (!(b > 0.0)) throw DomainError("kummer_1f1: requires b > 0");
  if (z > 0.0) throw DomainError("kummer_1f1: requires z <= 0");
  if (z == 0.0) return {1.0, 0.0, 1};

  // Kummer transformation: 1F1(a, b; z) = e^z 1F1(b - a, b; -z).
  // For the library's argument ranges b - a > 0, so every term below
  // is non-negative and the last-term estimate bounds the tail once
  // terms decrease.
  const double c = b - a;
  const double w = -z;
  const double scale = std::exp(z);
  double term = 1.0;
  double sum = 1.0;
  constexpr int kBudget = 500;
  for (int k = 0; k < kBudget; ++k) {
    term *= (c + k) / (b + k) * w / (k + 1);
    sum += term;
    if (!(std::abs(sum) < 1e300)) {
      throw NonConvergence("kummer_1f1: series overflow (|z| too large)");
    }
    if (std::abs(term) < 1e-17 * std::abs(sum) && k + 1 >= w) {
      return {scale * sum, scale * std::abs(term), k + 2};
    }
  }
  throw NonConvergence("kummer_1f1: term budget exhausted");
}

}  // namespace ets::specfun
