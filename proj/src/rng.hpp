#pragma once

#include <cstdint>

namespace reprlab {

// Counter-based per-trial generator: (seed, index) is expanded by splitmix64
// into xoshiro256** state. Trials are reproducible independently of ordering
// or thread count.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t index) {
        uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
        for (auto& w : s_) w = splitmix(x);
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n).
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    uint64_t s_[4];
    static uint64_t splitmix(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
};

} // namespace reprlab
