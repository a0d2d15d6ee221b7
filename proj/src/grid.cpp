#include "ets/grid.hpp"

#include <cmath>
#include <complex>

namespace ets {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > 2)
    throw DomainError("GridSpec: dim must be 1 or 2");
  for (const auto& a : axes_) {
    if (!(a.half_width > 0.0)) throw DomainError("GridSpec: half_width must be > 0");
    if (!power_of_two(a.n) || a.n < 64 || a.n > 65536)
      throw DomainError("GridSpec: n must be a power of two in [64, 65536]");
  }
}

GridSpec GridSpec::make_1d(double center, double half_width, int n) {
  return GridSpec({Axis{center, half_width, n}});
}

GridSpec GridSpec::make_2d(double cx, double lx, int nx, double cy, double ly,
                           int ny) {
  return GridSpec({Axis{cx, lx, nx}, Axis{cy, ly, ny}});
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (const auto& a : axes_) s *= a.n;
  return s;
}

std::size_t GridSpec::flat(int j0, int j1) const {
  if (axes_.size() == 1) return static_cast<std::size_t>(j0);
  return static_cast<std::size_t>(j0) * axes_[1].n + j1;
}

namespace fft {

void transform(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw DomainError("fft: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * 3.14159265358979323846 / len;
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        auto even = a[i + k];
        auto odd = a[i + k + len / 2] * w;
        a[i + k] = even + odd;
        a[i + k + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
}

}  // namespace fft

}  // namespace ets
