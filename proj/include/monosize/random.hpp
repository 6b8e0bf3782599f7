#pragma once

#include "monosize/decomposition.hpp"
#include "monosize/ideal.hpp"

#include <cstdint>
#include <vector>

namespace monosize {

/// SplitMix64 (Steele, Lea and Flood). Bounded draws use rejection sampling
/// on the top of the range, so sequences are identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  private:
    std::uint64_t state_;
};

struct RandomBounds {
    std::size_t max_vars = 4;
    std::size_t max_generators = 4;
    Exponent max_exponent = 3;
};

/// n in [1, max_vars], generator count in [1, max_generators], exponents
/// uniform in [0, max_exponent]; redrawn until the ideal is proper and
/// nonzero.
MonomialIdeal random_ideal(SplitMix64 &rng, const RandomBounds &bounds);

/// As random_ideal, but intersects 1..max_generators random irreducible
/// components instead.
MonomialIdeal random_component_ideal(SplitMix64 &rng, const RandomBounds &bounds);

} // namespace monosize
