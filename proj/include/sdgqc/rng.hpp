// Reproducible randomness.
//
// The generator is the 64-bit Mersenne Twister (std::mt19937_64, Matsumoto &
// Nishimura), whose output sequence is fixed by the C++ standard. Bounded
// draws use masking with rejection rather than std::uniform_int_distribution,
// whose algorithm is implementation-defined. Together these make every
// seeded result identical across platforms and standard libraries.

#pragma once

#include <cstdint>
#include <random>

namespace sdgqc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1);
    for (;;) {
      const std::uint64_t v = engine_() & mask;
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; used to derive independent per-trial seeds from a root seed.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) noexcept {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sdgqc
