#pragma once

#include <cstdint>
#include <random>

namespace ets {

// Seed plus stream counter; identical state yields identical output
// sequences on every platform (mt19937_64 is fully specified, and the
// uniform/normal maps below avoid the implementation-defined standard
// distributions).
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(RngState state);

  // uniform on the open interval (0, 1)
  double uniform01();
  // standard normal via Box-Muller (deterministic pairing)
  double normal();
  // unit-mean exponential
  double exponential();

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ets
