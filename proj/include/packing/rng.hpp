#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace packing {

// splitmix64, the 64-bit generator used wherever randomness is needed.
// Fixed here instead of <random> so that every output of the toolkit is
// byte-identical across standard libraries and platforms. Test vectors
// live in tests/test_rng.cpp.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Draw in [0, bound) by modulo; bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }
};

/// Fisher-Yates from the top index down, j = below(i + 1).
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng)
{
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(static_cast<uint64_t>(i)));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace packing
