// Binary contact sequences on a (module, time-slot) grid.
//
// Each bac is discretized into `resolution` equal slots; a slot is 1 iff its
// time interval overlaps the contact window [c1, c1 + tau_u] (mod tau) with
// positive measure. Bits are stored module-major: the row for module j covers
// all T periods in order, matching the row-per-module picture of a desired
// sequence and its terrain-contaminated realization.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "noise.hpp"

namespace rugosim {

struct BacSequence {
    int modules = 1;
    int periods = 1;
    int resolution = 1; // slots per period
    std::vector<std::uint8_t> bits; // size = modules * periods * resolution

    std::uint8_t at(int module, int period, int slot) const {
        const std::size_t row = static_cast<std::size_t>(module) * periods * resolution;
        return bits[row + static_cast<std::size_t>(period) * resolution + slot];
    }
};

/// Contact bits for one bac: slot s covers [s, s+1) * tau / resolution and is
/// set iff it overlaps the (possibly wrapped) contact window by a positive
/// length. Touching at an endpoint does not count.
inline void discretize_bac(const BacOutcome& out, double tau, int resolution,
                           std::vector<std::uint8_t>& bits_out) {
    const double slot_len = tau / resolution;
    const double lo = out.c1;
    const double hi = out.c1 + out.tau_u; // may exceed tau; wraps below
    for (int s = 0; s < resolution; ++s) {
        const double s0 = s * slot_len;
        const double s1 = (s + 1) * slot_len;
        double overlap = std::max(0.0, std::min(s1, hi) - std::max(s0, lo));
        if (hi > tau) // wrapped tail [0, hi - tau]
            overlap += std::max(0.0, std::min(s1, hi - tau) - s0);
        bits_out.push_back(overlap > 0.0 ? std::uint8_t{1} : std::uint8_t{0});
    }
}

/// Realized sequence Y for a sampled grid.
inline BacSequence discretize(const BacGrid& grid, double tau, int resolution) {
    if (resolution < 1)
        throw std::invalid_argument("discretize: resolution must be >= 1");
    BacSequence seq;
    seq.modules = grid.modules;
    seq.periods = grid.periods;
    seq.resolution = resolution;
    seq.bits.reserve(static_cast<std::size_t>(grid.modules) * grid.periods * resolution);
    for (int j = 0; j < grid.modules; ++j)
        for (int i = 0; i < grid.periods; ++i)
            discretize_bac(grid.at(i, j), tau, resolution, seq.bits);
    return seq;
}

/// Desired sequence X: full contact (0, tau) in every bac, i.e. all ones.
inline BacSequence desired_sequence(int modules, int periods, int resolution) {
    if (modules < 1 || periods < 1 || resolution < 1)
        throw std::invalid_argument("desired_sequence: all dimensions must be >= 1");
    BacSequence seq;
    seq.modules = modules;
    seq.periods = periods;
    seq.resolution = resolution;
    seq.bits.assign(static_cast<std::size_t>(modules) * periods * resolution, 1);
    return seq;
}

} // namespace rugosim
