#pragma once

#include <cstdint>

namespace anderson {

// SplitMix64. Small state, no warm-up, and cheap to reseed, which is what the
// counter-based trial derivation needs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
    std::uint64_t state_;
};

// Derives the generator seed for stream `counter` of a seeded experiment.
// Trial k always uses mix_seed(seed, k), independent of scheduling, worker
// count, or evaluation order; this is the whole reproducibility contract.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0x9E3779B97F4A7C15ull + 0x6A09E667F3BCC909ull));
    return g.next();
}

}  // namespace anderson
