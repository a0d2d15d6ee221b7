#include "ets/rng.hpp"

#include <cmath>

namespace ets {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(RngState state)
    : eng_(splitmix64(splitmix64(state.seed) ^ state.stream)) {}

double Rng::uniform01() {
  // 53 significant bits, offset by half an ulp: never 0, never 1
  return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform01()));
  const double phi = 2.0 * 3.14159265358979323846 * uniform01();
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

double Rng::exponential() { return -std::log(uniform01()); }

}  // namespace ets
