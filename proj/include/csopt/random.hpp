#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace csopt {

/// Deterministic random stream: identical seed, identical draw sequence,
/// bit for bit. Uniform draws are mapped into the open interval (0,1);
/// endpoint values are rejected so downstream samplers never hit ln(0) or
/// tan(+-pi/2). A stream is single-owner: parallel consumers each get their
/// own stream, seeded via derive_seed (base seed + stream index) or a
/// label hash (see fnv1a64).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform draw in the open interval (0,1).
  double uniform_open01() {
    for (;;) {
      const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;  // u < 1 holds by construction of the mantissa
    }
  }

  /// Standard normal draw (Marsaglia polar method, spare value cached).
  double normal();

  /// Unbiased uniform index in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Seed derivation rule for indexed sub-streams: base seed plus index.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return base + index;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a hash of a byte string; used to derive independent stream seeds
/// from textual labels (variant and problem names).
std::uint64_t fnv1a64(std::string_view text);

}  // namespace csopt
