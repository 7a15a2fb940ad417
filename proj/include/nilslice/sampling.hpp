#ifndef NILSLICE_SAMPLING_HPP
#define NILSLICE_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilslice/slices.hpp"

namespace nilslice {

/// Deterministic, portable generator (splitmix64).  The whole sampling
/// scheme is frozen: identical seeds produce identical streams on every
/// platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] (inclusive); span must be small.
    long int_in(long lo, long hi) {
        const std::uint64_t span = std::uint64_t(hi - lo + 1);
        return lo + long(next() % span);
    }
};

/// Per-cell, per-stream seed derived by FNV-1a over the textual cell id,
/// so parallel execution order never changes any sample.
inline std::uint64_t cell_seed(std::uint64_t seed, AlgebraKind kind, int m, int n,
                               const std::string& stream) {
    const std::string id = kind_name(kind) + ":" + std::to_string(m) + ":" + std::to_string(n) +
                           ":" + stream + ":" + std::to_string(seed);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Small exact rational: numerator uniform in [-9, 9], denominator
/// uniform in [1, 9].
inline GaussianRational sample_rational(Rng& rng) {
    const long num = rng.int_in(-9, 9);
    const long den = rng.int_in(1, 9);
    return GaussianRational::from_frac(num, den);
}

inline std::vector<GaussianRational> sample_flat(Rng& rng, size_t len) {
    std::vector<GaussianRational> v(len);
    for (auto& x : v) x = sample_rational(rng);
    return v;
}

inline SliceCoords sample_coords(const OrbitIndex& idx, Rng& rng) {
    return unflatten_coords(idx, sample_flat(rng, size_t(coord_shape(idx).total())));
}

}  // namespace nilslice

#endif
