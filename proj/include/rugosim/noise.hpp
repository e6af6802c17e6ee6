// Contact-noise model for a single bac.
//
// Rugose terrain delays the start of a contact by c1 ~ U(0, tau) and shortens
// its duration to tau_u, drawn from the mixed law
//
//     G(x) = (1 - b) * x / tau + b      on [0, tau],
//
// i.e. an atom of mass b at zero (complete bac loss) plus a uniform density
// (1 - b)/tau on (0, tau]. Contact that runs past the period boundary carries
// over periodically, so the thrust disturbance is the wrapped window integral
// f_u = \int_{c1}^{c1 + tau_u} f(t mod tau) dt, and the disturbed average
// thrust is f_hat = f_u / tau_u (zero on complete loss).
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rng.hpp"
#include "thrust.hpp"

namespace rugosim {

struct NoiseModel {
    double b = 0.0;      // probability of complete bac loss, in [0, 1]
    bool enabled = true; // disabled => every bac is nominal: c1 = 0, tau_u = tau

    void validate() const {
        if (!(b >= 0.0 && b <= 1.0))
            throw std::invalid_argument("noise model: b must be in [0, 1]");
    }
};

/// One sampled disturbed bac.
struct BacOutcome {
    double c1 = 0.0;    // contact delay in [0, tau)
    double tau_u = 0.0; // realized contact duration in [0, tau]
    double f_u = 0.0;   // thrust disturbance, integral of f over the contact window
    double f_hat = 0.0; // disturbed average thrust; 0 on complete loss
};

/// Inverse of G restricted to its continuous part: 0 for u < b, else
/// tau * (u - b) / (1 - b). Requires u in [0, 1).
inline double quantile_tau_u(const NoiseModel& noise, double u, double tau) {
    noise.validate();
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("quantile_tau_u: u must be in [0, 1)");
    if (!(tau > 0.0))
        throw std::invalid_argument("quantile_tau_u: tau must be positive");
    if (u < noise.b || noise.b >= 1.0) return 0.0;
    return tau * (u - noise.b) / (1.0 - noise.b);
}

/// Build the outcome for a forced (c1, tau_u) pair. sample_bac delegates here;
/// tests use it to pin exact windows.
inline BacOutcome make_outcome(const ThrustProfile& profile, double c1, double tau_u) {
    const double tau = profile.tau();
    if (!(c1 >= 0.0 && c1 < tau))
        throw std::invalid_argument("bac outcome: c1 must be in [0, tau)");
    if (!(tau_u >= 0.0 && tau_u <= tau))
        throw std::invalid_argument("bac outcome: tau_u must be in [0, tau]");
    BacOutcome out;
    out.c1 = c1;
    out.tau_u = tau_u;
    if (tau_u > 0.0) {
        out.f_u = profile.integrate(c1, c1 + tau_u);
        out.f_hat = out.f_u / tau_u;
    }
    return out;
}

/// Sample one disturbed bac. Draws exactly two uniforms (c1 first, then the
/// tau_u quantile) when noise is enabled, none when disabled.
inline BacOutcome sample_bac(const ThrustProfile& profile, const NoiseModel& noise,
                             RngStream& rng) {
    noise.validate();
    const double tau = profile.tau();
    if (!noise.enabled) {
        BacOutcome out;
        out.c1 = 0.0;
        out.tau_u = tau;
        out.f_u = profile.nominal_thrust() * tau;
        out.f_hat = profile.nominal_thrust();
        return out;
    }
    const double c1 = rng.uniform(0.0, tau);
    const double tau_u = quantile_tau_u(noise, rng.next_unit(), tau);
    return make_outcome(profile, c1, tau_u);
}

/// Exact sup distance between the empirical CDF of duration draws and the
/// mixed law G. G jumps by b at zero, where the textbook two-sided KS terms
/// would compare G(0) = b against the empirical CDF's left limit and report
/// a spurious distance of ~b; the zero group is therefore compared on the
/// right side only (both CDFs have left limit 0 there). Positive values are
/// continuity points and get the usual two-sided comparison.
inline double duration_ks_distance(std::vector<double> draws, const NoiseModel& noise,
                                   double tau) {
    noise.validate();
    if (draws.empty()) throw std::invalid_argument("duration_ks_distance: no draws");
    if (!(tau > 0.0)) throw std::invalid_argument("duration_ks_distance: tau must be positive");
    std::sort(draws.begin(), draws.end());
    const double n = static_cast<double>(draws.size());
    const auto reference = [&](double x) { return (1.0 - noise.b) * x / tau + noise.b; };
    double distance = 0.0;
    std::size_t i = 0;
    while (i < draws.size()) {
        std::size_t j = i;
        while (j < draws.size() && draws[j] == draws[i]) ++j;
        const double value = draws[i];
        const double g = reference(value);
        distance = std::max(distance, std::abs(static_cast<double>(j) / n - g));
        if (value > 0.0)
            distance = std::max(distance, std::abs(g - static_cast<double>(i) / n));
        i = j;
    }
    return distance;
}

/// An N-module by T-period grid of bac outcomes, drawn in fixed order:
/// period-major, module-minor (cell (i, j) at index i * modules + j).
struct BacGrid {
    int modules = 1; // N
    int periods = 1; // T
    std::vector<BacOutcome> cells;

    const BacOutcome& at(int period, int module) const {
        return cells[static_cast<std::size_t>(period) * modules + module];
    }
};

inline BacGrid sample_grid(const ThrustProfile& profile, const NoiseModel& noise,
                           int modules, int periods, RngStream& rng) {
    if (modules < 1 || periods < 1)
        throw std::invalid_argument("bac grid: modules and periods must be >= 1");
    BacGrid grid;
    grid.modules = modules;
    grid.periods = periods;
    grid.cells.reserve(static_cast<std::size_t>(modules) * periods);
    for (int i = 0; i < periods; ++i)
        for (int j = 0; j < modules; ++j)
            grid.cells.push_back(sample_bac(profile, noise, rng));
    return grid;
}

} // namespace rugosim
