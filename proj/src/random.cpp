#include "csopt/random.hpp"

#include <cmath>
#include <stdexcept>

namespace csopt {

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  for (;;) {
    const double a = 2.0 * uniform_open01() - 1.0;
    const double b = 2.0 * uniform_open01() - 1.0;
    const double s = a * a + b * b;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = b * f;
    has_spare_ = true;
    return a * f;
  }
}

std::size_t RandomStream::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  const std::uint64_t nn = n;
  // Reject the low 2^64 mod n values so the remainder is exactly uniform.
  const std::uint64_t cutoff = (-nn) % nn;
  for (;;) {
    const std::uint64_t x = gen_();
    if (x >= cutoff) return static_cast<std::size_t>(x % nn);
  }
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace csopt
