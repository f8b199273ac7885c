#ifndef VACRAD_RNG_HPP
#define VACRAD_RNG_HPP

#include <cstdint>

namespace vacrad {

/// Counter-based generator (splitmix64 applied to seed + counter). Sample j
/// depends only on (seed, j), so a parallel sweep over j reproduces the
/// serial stream exactly.
struct CounterRng {
    std::uint64_t seed;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t bits(std::uint64_t counter, std::uint64_t stream) const {
        // Two mixing rounds decorrelate the (counter, stream) lattice.
        return mix(mix(seed ^ (stream * 0xd1342543de82ef95ULL)) + counter);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform(std::uint64_t counter, std::uint64_t stream) const {
        return static_cast<double>(bits(counter, stream) >> 11) * 0x1.0p-53;
    }
};

} // namespace vacrad

#endif
