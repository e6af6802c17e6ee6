// Terrain-disturbed velocity under temporal and spatial redundancy.
//
// Temporal redundancy averages the disturbed thrust ratio over T periods:
//
//     v[1]_T = (1 / (gamma T)) * sum_i sign(tau_u^i) * f_u^i / tau_u^i.
//
// Spatial redundancy pools N serially connected modules within each period
// before dividing, a moving-average filter over the contact noise:
//
//     v[N]_T = (1 / (gamma T)) * sum_i sign(sum_j tau_u^ij)
//                               * (sum_j f_u^ij) / (sum_j tau_u^ij).
//
// With N = 1 the pooled expression reduces to the temporal one term-for-term,
// and the two operations agree bit-for-bit on a shared stream.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "noise.hpp"

namespace rugosim {

struct RedundancyConfig {
    int modules = 1; // N, spatial redundancy
    int periods = 1; // T, temporal redundancy

    void validate() const {
        if (modules < 1 || periods < 1)
            throw std::invalid_argument("redundancy config: N and T must be >= 1");
    }
};

/// One realized transport: average velocity, destination at the scheduled
/// time, and the per-period velocities behind them.
struct TransportOutcome {
    double v_hat = 0.0; // average terrain-disturbed velocity
    double d_hat = 0.0; // realized destination v_hat * T * tau
    std::vector<double> per_period_velocity;
};

/// Pooled velocity of one period's row of module outcomes.
inline double period_velocity(const BacGrid& grid, int period, const DragModel& drag) {
    double sum_tau = 0.0;
    double sum_f = 0.0;
    for (int j = 0; j < grid.modules; ++j) {
        const BacOutcome& cell = grid.at(period, j);
        sum_tau += cell.tau_u;
        sum_f += cell.f_u;
    }
    if (sum_tau <= 0.0) return 0.0; // every module lost contact
    return drag.velocity(sum_f / sum_tau);
}

inline TransportOutcome transport_from_grid(const BacGrid& grid, const DragModel& drag,
                                            double tau) {
    TransportOutcome out;
    out.per_period_velocity.reserve(grid.periods);
    double sum = 0.0;
    for (int i = 0; i < grid.periods; ++i) {
        const double v = period_velocity(grid, i, drag);
        out.per_period_velocity.push_back(v);
        sum += v;
    }
    out.v_hat = sum / grid.periods;
    out.d_hat = out.v_hat * grid.periods * tau;
    return out;
}

/// Average terrain-disturbed velocity over T periods, single module.
inline TransportOutcome velocity_temporal(const ThrustProfile& profile, const DragModel& drag,
                                          const NoiseModel& noise, int periods, RngStream& rng) {
    if (periods < 1)
        throw std::invalid_argument("velocity_temporal: T must be >= 1");
    drag.validate();
    const BacGrid grid = sample_grid(profile, noise, 1, periods, rng);
    return transport_from_grid(grid, drag, profile.tau());
}

/// Average terrain-disturbed velocity for N serially connected modules over
/// T periods. N = 1 is exactly velocity_temporal.
inline TransportOutcome velocity_spatial(const ThrustProfile& profile, const DragModel& drag,
                                         const NoiseModel& noise, const RedundancyConfig& cfg,
                                         RngStream& rng) {
    cfg.validate();
    drag.validate();
    const BacGrid grid = sample_grid(profile, noise, cfg.modules, cfg.periods, rng);
    return transport_from_grid(grid, drag, profile.tau());
}

/// Cumulative displacement after each of cfg.periods periods. Nondecreasing
/// whenever f(t) >= 0.
inline std::vector<double> simulate_trajectory(const ThrustProfile& profile,
                                               const DragModel& drag, const NoiseModel& noise,
                                               const RedundancyConfig& cfg, RngStream& rng) {
    const TransportOutcome outcome = velocity_spatial(profile, drag, noise, cfg, rng);
    std::vector<double> cumulative;
    cumulative.reserve(outcome.per_period_velocity.size());
    double total = 0.0;
    for (double v : outcome.per_period_velocity) {
        total += v * profile.tau();
        cumulative.push_back(total);
    }
    return cumulative;
}

inline constexpr int kDefaultFirstPassageCap = 10000;

/// Smallest number of periods whose cumulative displacement reaches
/// `distance`; nullopt if not reached within t_max periods (cfg.periods is
/// ignored, the walk runs open-ended with cfg.modules modules).
inline std::optional<int> first_passage_time(const ThrustProfile& profile, const DragModel& drag,
                                             const NoiseModel& noise, const RedundancyConfig& cfg,
                                             double distance, RngStream& rng,
                                             int t_max = kDefaultFirstPassageCap) {
    cfg.validate();
    drag.validate();
    if (!(distance > 0.0))
        throw std::invalid_argument("first_passage_time: distance must be positive");
    if (t_max < 1)
        throw std::invalid_argument("first_passage_time: t_max must be >= 1");
    double total = 0.0;
    for (int t = 1; t <= t_max; ++t) {
        const BacGrid row = sample_grid(profile, noise, cfg.modules, 1, rng);
        total += period_velocity(row, 0, drag) * profile.tau();
        if (total >= distance) return t;
    }
    return std::nullopt;
}

} // namespace rugosim
