#pragma once

#include <cstdint>

namespace spikenorm {

// splitmix64.  Small, fully specified, and trivially portable, so trial
// data can be reproduced bit-for-bit from (seed, stream) in any language:
//
//   next(): state += 0x9E3779B97F4A7C15
//           z = state
//           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//           z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//           return z ^ (z >> 31)
//
//   uniform doubles: (next() >> 11) * 2^-53, in [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    // Uniform in {0, ..., n-1} by modulo reduction (n tiny here, bias moot).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Scrambles a word through the splitmix64 output stage.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Independent per-trial generator: state = mix(seed ^ mix(stream + phi)),
// phi = 0x9E3779B97F4A7C15.  Streams never share a state sequence window.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(SplitMix64::mix(
        seed ^ SplitMix64::mix(stream + 0x9E3779B97F4A7C15ULL)));
}

}  // namespace spikenorm
