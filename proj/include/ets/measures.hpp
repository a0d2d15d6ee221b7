#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ets/errors.hpp"

namespace ets {

// Finite atomic spectral measure on R^n \ {0}.
// Atoms never sit at the origin and all weights are strictly positive.
class SpectralMeasure {
 public:
  struct Atom {
    Eigen::VectorXd location;
    double weight;
  };

  SpectralMeasure(int dim, std::vector<Atom> atoms);

  int dim() const { return dim_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const;

  // Sum_j w_j (||x_j||^2 ∧ ||x_j||^alpha), the integrability functional.
  double integrability_mass(double alpha) const;

 private:
  int dim_;
  std::vector<Atom> atoms_;
};

// Measurable family {Q(.|u)}: per unit direction, a finite atomic measure
// on (0, infinity). Any sphere-measure mass is folded into the radial masses.
class TemperingFamily {
 public:
  struct RadialAtom {
    double s;     // radial location, > 0
    double mass;  // > 0
  };
  struct Entry {
    Eigen::VectorXd direction;  // unit norm
    std::vector<RadialAtom> radial_atoms;
  };

  TemperingFamily(int dim, std::vector<Entry> entries);

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  int dim_;
  std::vector<Entry> entries_;
};

// q(r, u) = sum_j m_j e^{-r s_j}  (Rosinski exponential tempering kernel)
double tempering_q_exp(const TemperingFamily& fam, double r,
                       int direction_index);

// q(r, u) = sum_j m_j e^{-r^2 s_j^2}  (TID Gaussian tempering kernel)
double tempering_q_gauss(const TemperingFamily& fam, double r,
                         int direction_index);

// Spectral measure from the tempering family: a Q atom of mass m at s*u
// maps to an R atom at u/s with weight s^alpha * m. Coincident locations
// are merged by weight addition.
SpectralMeasure build_r_from_q(const TemperingFamily& fam, double alpha);

// (R(dx) + R(-dx)) / 2, atoms merged; total mass is preserved exactly.
SpectralMeasure symmetrize(const SpectralMeasure& r);

// Radial Levy tail mass along the ray of atom j beyond radius r0:
// w_j * Gamma(-alpha, r0).
double levy_tail_mass(const SpectralMeasure& r, double alpha, int atom_index,
                      double r0);

}  // namespace ets
