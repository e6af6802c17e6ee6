// Deterministic counter-derived random streams.
//
// Every stochastic routine in this library takes an RngStream (or a 64-bit
// seed it derives streams from). Streams are cheap value types; replicate r
// of an ensemble owns RngStream(derive_seed(seed, r)), so results are
// identical regardless of evaluation order or worker count.
#pragma once

#include <cstdint>

namespace rugosim {

// splitmix64 finalizer (Vigna / Steele et al.), a full-avalanche 64-bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Derive an independent child seed from (seed, key). Used for replicate,
/// module-scan, and panel sub-streams.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    return mix64(mix64(seed + kGoldenGamma) ^ mix64(key + 0x6a09e667f3bcc909ULL));
}

/// Counter-based uniform stream: a Weyl counter pushed through mix64.
/// Not cryptographic; chosen for exact cross-platform reproducibility.
class RngStream {
  public:
    explicit constexpr RngStream(std::uint64_t seed) : state_(mix64(seed + kGoldenGamma)) {}

    constexpr std::uint64_t next_u64() {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    constexpr double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    constexpr double uniform(double lo, double hi) {
        return lo + next_unit() * (hi - lo);
    }

  private:
    std::uint64_t state_;
};

} // namespace rugosim
