#pragma once

#include "nicecurves/rational.hpp"

#include <cstdint>

namespace nicecurves {

/// Deterministic PRNG (splitmix64) so sampling campaigns replay bit-exactly
/// across platforms. Default seed 0x4E1CE.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed = 0x4E1CE) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

    /// Random rational a/b with 1 <= b <= max_height, |a| <= max_height, a/b != excluded values.
    Rational rational(long max_height, bool nonzero = false) {
        while (true) {
            long b = range(1, max_height);
            long a = range(-max_height, max_height);
            if (nonzero && a == 0) continue;
            return Rational(a, b);
        }
    }
};

} // namespace nicecurves
