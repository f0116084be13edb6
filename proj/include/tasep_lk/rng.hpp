#pragma once

#include <cstdint>

namespace tasep_lk {

// splitmix64 (Steele, Lea, Flood's 64-bit finalizer mix). Chosen over the
// standard-library engines so streams are identical across platforms and
// library versions; simulation reruns must be bit-exact for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Multiply-shift map of the full 64-bit word;
    // the residual bias is ~n / 2^64, immaterial for lattice-sized n.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace tasep_lk
