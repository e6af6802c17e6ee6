// Monte Carlo ensemble statistics over transport outcomes: empirical CDFs and
// quantile intervals, success probabilities, the empirical minimal spatial
// redundancy, and the closed-form companions (asymptotic mean velocity
// (1 - b^N) * C_s and the minimal-redundancy bound).
//
// Replicate r of an ensemble draws from RngStream(derive_seed(seed, r)), so
// ensembles are reproducible and thread-count independent by construction.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "redundancy.hpp"
#include "stats.hpp"

namespace rugosim {

/// A matter-transport task: reach distance D at scheduled time T (periods)
/// within tolerance epsilon, with required success probability p0. k is the
/// flat-terrain pace in periods per unit distance (1 / (v_open * tau)), so
/// k * D is the on-schedule period count.
struct TransportTask {
    double distance = 1.0;     // D
    int scheduled_periods = 1; // T
    double epsilon = 0.1;
    double p0 = 0.9;
    double k = 1.0;

    void validate() const {
        if (!(distance > 0.0)) throw std::invalid_argument("task: D must be positive");
        if (scheduled_periods < 1) throw std::invalid_argument("task: T must be >= 1");
        if (!(epsilon > 0.0)) throw std::invalid_argument("task: epsilon must be positive");
        if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("task: p0 must be in (0, 1)");
        if (!(k > 0.0)) throw std::invalid_argument("task: k must be positive");
    }

    bool success(double realized_destination) const {
        return std::abs(realized_destination - distance) < epsilon;
    }
};

/// Monte Carlo replicate values of one scalar quantity (v_hat or d_hat),
/// in replicate order, plus provenance.
struct SimResult {
    std::vector<double> samples; // replicate order
    std::uint64_t seed = 0;
    int replicate_count = 0;

    std::vector<double> sorted() const {
        std::vector<double> s = samples;
        std::sort(s.begin(), s.end());
        return s;
    }

    /// Sorted values with plotting positions (r - 0.5) / n.
    std::vector<std::pair<double, double>> cdf() const { return empirical_cdf(samples); }

    double mean() const { return rugosim::mean(samples); }
    double variance() const { return sample_variance(samples); }
    double std_error() const { return mean_std_error(samples); }

    /// Same ensemble with every sample scaled, e.g. v_hat -> d_hat = v_hat * T * tau.
    SimResult scaled(double factor) const {
        SimResult out = *this;
        for (double& x : out.samples) x *= factor;
        return out;
    }
};

namespace detail {

template <typename PerReplicate>
void run_replicates(int replicates, int threads, PerReplicate&& body) {
    if (replicates < 1) throw std::invalid_argument("ensemble: replicates must be >= 1");
    if (threads <= 1 || replicates == 1) {
        for (int r = 0; r < replicates; ++r) body(r);
        return;
    }
    const int worker_count = std::min(threads, replicates);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
            for (int r = w; r < replicates; r += worker_count) body(r);
        });
    }
    for (auto& worker : workers) worker.join();
}

} // namespace detail

/// Monte Carlo ensemble of v_hat over `replicates` independent transports.
/// Deterministic for a fixed seed, independent of thread count.
inline SimResult ensemble(const ThrustProfile& profile, const DragModel& drag,
                          const NoiseModel& noise, const RedundancyConfig& cfg, int replicates,
                          std::uint64_t seed, int threads = 1) {
    cfg.validate();
    drag.validate();
    noise.validate();
    SimResult result;
    result.seed = seed;
    result.replicate_count = replicates;
    result.samples.resize(replicates);
    detail::run_replicates(replicates, threads, [&](int r) {
        RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        result.samples[r] = velocity_spatial(profile, drag, noise, cfg, rng).v_hat;
    });
    return result;
}

/// Central empirical confidence interval: quantiles at (1 - level)/2 and
/// 1 - (1 - level)/2, linearly interpolated between order statistics.
inline std::pair<double, double> destination_ci(const SimResult& result, double level) {
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("destination_ci: level must be in (0, 1)");
    const std::vector<double> sorted = result.sorted();
    const double alpha = (1.0 - level) / 2.0;
    return {quantile_sorted(sorted, alpha), quantile_sorted(sorted, 1.0 - alpha)};
}

struct ProbEstimate {
    double p_hat = 0.0;
    double std_err = 0.0; // Wald, sqrt(p (1 - p) / n)
    int replicates = 0;
};

/// Fraction of replicates whose realized destination lands within epsilon of
/// the task's target, evaluated at the scheduled time cfg.periods.
inline ProbEstimate success_probability(const ThrustProfile& profile, const DragModel& drag,
                                        const NoiseModel& noise, const RedundancyConfig& cfg,
                                        const TransportTask& task, int replicates,
                                        std::uint64_t seed, int threads = 1) {
    task.validate();
    const SimResult velocities = ensemble(profile, drag, noise, cfg, replicates, seed, threads);
    const double horizon = static_cast<double>(cfg.periods) * profile.tau();
    int successes = 0;
    for (double v : velocities.samples)
        if (task.success(v * horizon)) ++successes;
    ProbEstimate est;
    est.replicates = replicates;
    est.p_hat = static_cast<double>(successes) / static_cast<double>(replicates);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(replicates));
    return est;
}

/// Smallest N <= n_max whose estimated success probability reaches task.p0,
/// scanned upward from N = 1; nullopt if none does. `slack_se` loosens the
/// acceptance threshold to p0 - slack_se * SE(p_hat): when the true success
/// probability sits exactly at p0 (it does whenever the analytic bound is an
/// integer), a pure point-estimate rule flips a coin at the critical N, so
/// sweep pipelines pass a small slack to absorb Monte Carlo flutter.
inline std::optional<int> minimal_redundancy_empirical(const ThrustProfile& profile,
                                                       const DragModel& drag,
                                                       const NoiseModel& noise,
                                                       const TransportTask& task, int replicates,
                                                       std::uint64_t seed, int n_max,
                                                       int threads = 1, double slack_se = 0.0) {
    if (n_max < 1) throw std::invalid_argument("minimal_redundancy_empirical: n_max must be >= 1");
    if (!(slack_se >= 0.0))
        throw std::invalid_argument("minimal_redundancy_empirical: slack_se must be >= 0");
    for (int n = 1; n <= n_max; ++n) {
        const RedundancyConfig cfg{n, task.scheduled_periods};
        const ProbEstimate est =
            success_probability(profile, drag, noise, cfg, task, replicates,
                                derive_seed(seed, static_cast<std::uint64_t>(n)), threads);
        if (est.p_hat >= task.p0 - slack_se * est.std_err) return n;
    }
    return std::nullopt;
}

/// Closed-form minimal-redundancy bound log(1 - p0^(1/(kD))) / log(b),
/// reported as a real (>= 1); callers ceil for integer use. Limits: b = 0
/// reports 1, b = 1 reports +infinity (no finite redundancy suffices).
inline double bound_minimal_redundancy(const TransportTask& task, double b) {
    task.validate();
    if (!(b >= 0.0 && b <= 1.0))
        throw std::invalid_argument("bound_minimal_redundancy: b must be in [0, 1]");
    const double k_distance = task.k * task.distance;
    if (!(k_distance >= 1.0))
        throw std::invalid_argument("bound_minimal_redundancy: k * D must be >= 1");
    if (b == 0.0) return 1.0;
    if (b == 1.0) return std::numeric_limits<double>::infinity();
    const double root = std::pow(task.p0, 1.0 / k_distance);
    const double raw = std::log(1.0 - root) / std::log(b);
    return std::max(1.0, raw);
}

inline constexpr int kAsymptoticModules = 64;
inline constexpr int kAsymptoticPeriods = 64;

/// Asymptotic mean velocity constant C_s, estimated as the Monte Carlo mean
/// at high redundancy (N = T = 64). For constant profiles C_s = v_open
/// exactly, no sampling needed.
inline double estimate_cs(const ThrustProfile& profile, const DragModel& drag,
                          const NoiseModel& noise, int replicates = 2000,
                          std::uint64_t seed = 0xC5C5C5C5ULL, int threads = 1) {
    if (profile.kind() == ThrustProfile::Kind::constant || !noise.enabled || noise.b == 0.0)
        return nominal_velocity(profile, drag);
    const RedundancyConfig cfg{kAsymptoticModules, kAsymptoticPeriods};
    return ensemble(profile, drag, noise, cfg, replicates, seed, threads).mean();
}

/// Mean-velocity approximation (1 - b^N) * C_s.
inline double mean_velocity_approx(const ThrustProfile& profile, const DragModel& drag, double b,
                                   int modules) {
    if (modules < 1) throw std::invalid_argument("mean_velocity_approx: N must be >= 1");
    NoiseModel noise{b, true};
    noise.validate();
    const double c_s = estimate_cs(profile, drag, noise);
    return (1.0 - std::pow(b, modules)) * c_s;
}

/// Closed-form companions reported next to ensemble statistics.
struct AnalyticSummary {
    double c_s = 0.0;         // asymptotic mean velocity constant
    double mean_approx = 0.0; // (1 - b^N) * C_s
    double bound_n = 0.0;     // minimal-redundancy bound, real-valued
};

inline AnalyticSummary analytic_summary(const ThrustProfile& profile, const DragModel& drag,
                                        const NoiseModel& noise, int modules,
                                        const TransportTask& task) {
    AnalyticSummary s;
    s.c_s = estimate_cs(profile, drag, noise);
    const double b = noise.enabled ? noise.b : 0.0;
    s.mean_approx = (1.0 - std::pow(b, modules)) * s.c_s;
    s.bound_n = bound_minimal_redundancy(task, b);
    return s;
}

} // namespace rugosim
