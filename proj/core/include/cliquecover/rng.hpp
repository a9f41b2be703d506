#pragma once

#include <cstdint>
#include <random>

namespace cliquecover {

// Seeded generator for the sampled verification modes. mt19937_64 has a fully
// specified output sequence, and we avoid std::uniform_int_distribution (whose
// mapping is implementation-defined), so identical seeds give identical runs
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) by rejection below the largest multiple of bound.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliquecover
