#pragma once

#include <cstdint>
#include <initializer_list>

namespace graphent {

// Small, fully specified PRNG (splitmix64). Unlike the std distributions its
// output is identical across standard library implementations, which the
// sweep reproducibility contract relies on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift; the tiny bias is irrelevant at our sizes.
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a list of
// coordinates, so every (graph, alpha, ...) cell draws from its own stream.
inline std::uint64_t mix_seed(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> coords) {
  SplitMix64 mixer(seed);
  std::uint64_t h = mixer.next();
  for (std::uint64_t c : coords) {
    SplitMix64 step(h ^ (c + 0x632BE59BD9B4E019ULL));
    h = step.next();
  }
  return h;
}

}  // namespace graphent
