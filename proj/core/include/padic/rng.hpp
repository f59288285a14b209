#ifndef PADIC_RNG_HPP
#define PADIC_RNG_HPP

#include <cstdint>
#include <random>

namespace padic {

/// Deterministic random source. mt19937_64 output is fully specified by the
/// standard, and every derived draw below avoids std::*_distribution (whose
/// algorithms are implementation-defined), so sequences are bit-reproducible
/// across compilers and platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint32_t digit(std::uint32_t prime) {
    return static_cast<std::uint32_t>(bounded(prime));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

/// splitmix64; used to derive independent per-chain seeds from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace padic

#endif
