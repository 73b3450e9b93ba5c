#pragma once

#include <cstdint>

namespace ratnet {

// SplitMix64 (Steele, Lea & Flood 2014). Every source of randomness in the
// project derives from a single 64-bit root seed through this generator, so
// reports are reproducible bit-for-bit across platforms. Substreams are
// obtained by mixing a stream tag into the root state; trial i of a Monte
// Carlo run uses substream(root, i) and never shares state with trial j.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; never uses std::uniform_int_distribution
  // (its output is implementation-defined).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Deterministic stream split: child state depends on (root, tag) only.
inline SplitMix64 substream(std::uint64_t root, std::uint64_t tag) {
  SplitMix64 tagger(tag ^ 0xA0761D6478BD642FULL);
  return SplitMix64(root ^ tagger.next());
}

}  // namespace ratnet
