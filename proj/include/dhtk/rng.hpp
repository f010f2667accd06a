#pragma once

// Counter-based pseudorandom generator: the k-th draw of a stream is
//
//     mix(seed + k * 0x9E3779B97F4A7C15)
//
// where mix is the SplitMix64 finalizer
//
//     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//     z ^= z >> 27;  z *= 0x94D049BB133111EB;
//     z ^= z >> 31;
//
// Draws are pure functions of (seed, counter), so results are reproducible
// regardless of evaluation order or sharding, and streams split by deriving
// child seeds from draws.

#include <cstdint>

namespace dhtk {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t at(std::uint64_t counter) const {
        std::uint64_t z = seed_ + counter * 0x9E3779B97F4A7C15ULL;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n); n small, modulo bias negligible and
    // irrelevant for the test sweeps this backs.
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
        return at(counter) % n;
    }

    CounterRng split(std::uint64_t counter) const { return CounterRng(at(counter)); }

private:
    std::uint64_t seed_;
};

}  // namespace dhtk
