#pragma once

#include <cstdint>

namespace qvol {

// SplitMix64: counter-based, splittable, 64-bit state. One stream per chain.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // independent stream derived from this one
    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0, 1)
    // uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        // rejection-free multiply-shift; bias < 2^-64, irrelevant here
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

  private:
    uint64_t state_;
};

}  // namespace qvol
