#pragma once

#include <cstdint>

#include "toric/matrix.hpp"

// deterministic splitmix64 generator for reproducible randomized tests
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }  // inclusive
};

inline toric::IntegerMatrix random_matrix(TestRng& rng, int m, int n, long lo, long hi) {
    toric::IntegerMatrix M(m, n);
    for (toric::Int& x : M.entries) x = rng.range(lo, hi);
    return M;
}
