#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace stylemix::rng {

// Deterministic random stream. The engine (mt19937_64) is bit-exact by
// the standard; all distribution transforms are implemented here rather
// than with std:: distributions so draw sequences are identical across
// standard library implementations.
class Stream {
public:
    explicit Stream(std::uint64_t seed_word);

    std::uint64_t next_u64();

    // [0,1) with 53 random bits.
    double uniform01();

    // [lo,hi); lo == hi returns lo exactly.
    double uniform(double lo, double hi);

    // Standard normal (Marsaglia polar, spare discarded).
    double normal();

    // Gamma(shape, 1), shape > 0 (Marsaglia-Tsang).
    double gamma(double shape);

    // Beta(a, b), a > 0, b > 0, via two gamma draws.
    double beta(double a, double b);

    // Unbiased integer in [0, n), n >= 1 (rejection sampling).
    std::uint64_t uniform_index(std::uint64_t n);

    // Uniformly random permutation of {0..n-1} (Fisher-Yates).
    std::vector<int> permutation(int n);

private:
    std::mt19937_64 engine_;
};

// Counter-based stream derivation: distinct (seed, entry_index) pairs give
// statistically independent streams, independent of processing order,
// worker count, and platform.
Stream derive_stream(std::uint64_t seed, std::uint64_t entry_index);

}  // namespace stylemix::rng
