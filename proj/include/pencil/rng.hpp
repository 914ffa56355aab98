// Deterministic seeded RNG (splitmix64). Never seeded from the clock.
#ifndef PENCIL_RNG_HPP
#define PENCIL_RNG_HPP

#include <cstdint>

#include "pencil/bigint.hpp"

namespace pencil {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) for n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t lim = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= lim);
        return v % n;
    }

    /// Uniform BigInt in [0, n).
    BigInt below_big(const BigInt& n) {
        size_t bits = n.bit_length();
        for (;;) {
            BigInt v = random_bits(bits);
            if (v < n) return v;
        }
    }

    BigInt random_bits(size_t bits) {
        BigInt v = 0;
        size_t produced = 0;
        while (produced < bits) {
            v = v * BigInt::pow2(32) + BigInt(static_cast<long>(next_u64() >> 32));
            produced += 32;
        }
        // Trim the excess so the result is uniform over [0, 2^bits).
        return fdiv_r(v, BigInt::pow2(static_cast<unsigned long>(bits)));
    }

    /// Derive an independent stream for a labelled sub-task.
    Rng fork(std::uint64_t label) {
        Rng child(next_u64() ^ (label * 0x9e3779b97f4a7c15ULL));
        return child;
    }

  private:
    std::uint64_t state_;
};

}  // namespace pencil

#endif
