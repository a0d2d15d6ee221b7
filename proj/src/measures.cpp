#include "ets/measures.hpp"

#include <cmath>

#include "ets/specfun.hpp"

namespace ets {

namespace {

constexpr double kMergeTol = 1e-12;

// Append (loc, w) to atoms, merging into an existing atom within kMergeTol.
void merge_atom(std::vector<SpectralMeasure::Atom>& atoms,
                const Eigen::VectorXd& loc, double w) {
  for (auto& a : atoms) {
    if ((a.location - loc).norm() <= kMergeTol) {
      a.weight += w;
      return;
    }
  }
  atoms.push_back({loc, w});
}

}  // namespace

SpectralMeasure::SpectralMeasure(int dim, std::vector<Atom> atoms)
    : dim_(dim), atoms_(std::move(atoms)) {
  if (dim_ < 1) throw DomainError("SpectralMeasure: dim must be >= 1");
  for (const auto& a : atoms_) {
    if (a.location.size() != dim_)
      throw DomainError("SpectralMeasure: atom dimension mismatch");
    if (a.location.norm() == 0.0)
      throw DomainError("SpectralMeasure: atom at the origin (R({0}) must be 0)");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw DomainError("SpectralMeasure: weights must be positive and finite");
  }
}

double SpectralMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

double SpectralMeasure::integrability_mass(double alpha) const {
  double m = 0.0;
  for (const auto& a : atoms_) {
    double n = a.location.norm();
    m += a.weight * std::min(n * n, std::pow(n, alpha));
  }
  return m;
}

TemperingFamily::TemperingFamily(int dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 1) throw DomainError("TemperingFamily: dim must be >= 1");
  for (auto& e : entries_) {
    if (e.direction.size() != dim_)
      throw DomainError("TemperingFamily: direction dimension mismatch");
    double n = e.direction.norm();
    if (std::abs(n - 1.0) > 1e-9)
      throw DomainError("TemperingFamily: direction is not unit-norm");
    e.direction /= n;  // absorb round-trip error
    for (const auto& ra : e.radial_atoms) {
      if (!(ra.s > 0.0) || !(ra.mass > 0.0))
        throw DomainError("TemperingFamily: radial atoms need s > 0, mass > 0");
    }
  }
}

double tempering_q_exp(const TemperingFamily& fam, double r,
                       int direction_index) {
  if (direction_index < 0 ||
      direction_index >= static_cast<int>(fam.entries().size()))
    throw IndexError("tempering_q_exp: bad direction index");
  double q = 0.0;
  for (const auto& ra : fam.entries()[direction_index].radial_atoms)
    q += ra.mass * std::exp(-r * ra.s);
  return q;
}

double tempering_q_gauss(const TemperingFamily& fam, double r,
                         int direction_index) {
  if (direction_index < 0 ||
      direction_index >= static_cast<int>(fam.entries().size()))
    throw IndexError("tempering_q_gauss: bad direction index");
  double q = 0.0;
  for (const auto& ra : fam.entries()[direction_index].radial_atoms)
    q += ra.mass * std::exp(-r * r * ra.s * ra.s);
  return q;
}

SpectralMeasure build_r_from_q(const TemperingFamily& fam, double alpha) {
  if (fam.entries().empty())
    throw DomainError("build_r_from_q: empty tempering family");
  std::vector<SpectralMeasure::Atom> atoms;
  for (const auto& e : fam.entries()) {
    for (const auto& ra : e.radial_atoms) {
      // Q atom at x = s*u:  x/||x||^2 = u/s,  ||x||^alpha = s^alpha
      merge_atom(atoms, e.direction / ra.s, std::pow(ra.s, alpha) * ra.mass);
    }
  }
  return SpectralMeasure(fam.dim(), std::move(atoms));
}

SpectralMeasure symmetrize(const SpectralMeasure& r) {
  std::vector<SpectralMeasure::Atom> atoms;
  for (const auto& a : r.atoms()) {
    merge_atom(atoms, a.location, a.weight / 2.0);
    merge_atom(atoms, -a.location, a.weight / 2.0);
  }
  return SpectralMeasure(r.dim(), std::move(atoms));
}

double levy_tail_mass(const SpectralMeasure& r, double alpha, int atom_index,
                      double r0) {
  if (atom_index < 0 || atom_index >= static_cast<int>(r.size()))
    throw IndexError("levy_tail_mass: bad atom index");
  if (!(r0 > 0.0)) throw DomainError("levy_tail_mass: requires r0 > 0");
  return r.atoms()[atom_index].weight *
         specfun::upper_incomplete_gamma(-alpha, r0);
}

}  // namespace ets
