#pragma once

#include <cstdint>

namespace walshlab {

// splitmix64 finalizer; used to derive independent streams from (seed, index).
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic 64-bit generator (splitmix64). Pure integer arithmetic, so a
// given seed yields the same sequence on every platform. Not thread safe:
// each concurrent call site must own its generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound); bound must be nonzero.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform draw from [0, 2^k) for 0 <= k <= 64.
    uint64_t bits(int k) {
        if (k == 0) return 0;
        return next() >> (64 - k);
    }

private:
    uint64_t state_;
};

// Stream derivation scheme: worker/trial `index` of a run seeded with `seed`
// draws from derive_stream(seed, index). Streams for distinct indices are
// independent for all practical purposes.
inline SplitMix64 derive_stream(uint64_t seed, uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index)));
}

}  // namespace walshlab
