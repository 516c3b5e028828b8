#ifndef KGA_RNG_HPP
#define KGA_RNG_HPP

#include <cstdint>
#include <random>

namespace kga {

/// splitmix64 finalizer. Used to derive well-separated seeds from
/// (base seed, index) tuples; see seed_combine.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic seed derivation: seed_combine(a, b) folds b into a.
/// Chained calls give per-cell seeds like
/// seed_combine(seed_combine(base, instance_index), run_index).
inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

/// Seeded random stream with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// fully specified by the C++ standard. All derived draws (doubles, bounded
/// integers) are implemented here rather than with std::*_distribution,
/// which the standard leaves implementation-defined. Same seed, same stream,
/// on every platform.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  /// Lemire's multiply-shift method with rejection, so the result is
  /// exactly uniform.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::size_t next_index(std::size_t bound) {
    return static_cast<std::size_t>(next_below(bound));
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

} // namespace kga

#endif // KGA_RNG_HPP
