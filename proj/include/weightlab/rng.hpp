#pragma once

#include <cstdint>

#include "weightlab/rational.hpp"

namespace weightlab {

// SplitMix64. Hand-rolled so sampled parameter streams are identical across
// platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Nonzero numerator in [-num_max, num_max], denominator in [1, den_max].
    Rational rational(long num_max, long den_max) {
        long num = 0;
        while (num == 0) num = range(-num_max, num_max);
        return Rational(num, range(1, den_max));
    }

    // Rational guaranteed non-integral (denominator >= 2 after reduction).
    Rational non_integer_rational(long num_max, long den_max) {
        for (;;) {
            Rational r = rational(num_max, den_max);
            if (!r.is_integer()) return r;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace weightlab
