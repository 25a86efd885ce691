#pragma once

#include <cmath>
#include <cstdint>

// Counter-based deterministic random source.  SplitMix64 keeps the whole
// generator state in one 64-bit word, so seeding is trivial and streams can
// be split by mixing a cell index into the seed.

namespace benfgg {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stable per-cell seed for parallel sweeps: independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // uniform on [0, 1), 53 random bits
    double next_u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1), safe under log()
    double next_u01_open() { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // standard normal via Box-Muller, spare cached
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_u01_open()));
        const double t = 6.283185307179586476925287 * next_u01();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace benfgg
