// Deterministic noise generator for the source simulators. Kept separate
// from the PRNG under test so that simulation runs are reproducible without
// depending on the component being evaluated.
#pragma once

#include <cmath>
#include <cstdint>

namespace entrokit {

// xoshiro256** seeded via splitmix64. Portable: identical output for
// identical seeds on every platform.
class SimRng {
public:
    explicit SimRng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            s = z ^ (z >> 31);
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1], safe as a log() argument.
    double uniform_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    // Standard normal via Box-Muller, one spare value cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace entrokit
