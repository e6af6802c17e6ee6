// Rugose block-terrain generation and contact-noise estimation from measured
// bac durations.
//
// Rugosity R_g is the population standard deviation of block heights divided
// by the block side length. Heightmaps are drawn i.i.d. from equally spaced
// discrete levels and affinely rescaled to hit a target R_g exactly; the
// noise level b is estimated from a log of measured tau_u values as the
// empirical mass at zero, with a linear fit of the positive-part CDF as a
// model diagnostic (under G the intercept is ~b and the slope ~(1-b)/tau).
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rng.hpp"
#include "stats.hpp"

namespace rugosim {

struct TerrainMap {
    int rows = 0;
    int cols = 0;
    std::vector<double> heights; // row-major, size rows * cols
    double block_side = 0.1;
    double rugosity = 0.0; // stored R_g; recompute with rugosim::rugosity

    double at(int r, int c) const { return heights[static_cast<std::size_t>(r) * cols + c]; }

    void validate() const {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("terrain: grid must be nonempty");
        if (heights.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("terrain: heights size does not match grid");
        if (!(block_side > 0.0))
            throw std::invalid_argument("terrain: block side must be positive");
    }
};

/// Population standard deviation of heights over all blocks, normalized by
/// the block side length. A single block has rugosity 0.
inline double rugosity(const TerrainMap& map) {
    map.validate();
    const double n = static_cast<double>(map.heights.size());
    double m = 0.0;
    for (double h : map.heights) m += h;
    m /= n;
    double ss = 0.0;
    for (double h : map.heights) ss += (h - m) * (h - m);
    return std::sqrt(ss / n) / map.block_side;
}

/// Generate a rows x cols block heightmap with realized rugosity equal to
/// target_rg. Heights are drawn uniformly from `height_levels` equally spaced
/// levels, then affinely rescaled (and shifted so the lowest block sits at 0).
inline TerrainMap generate_terrain(int rows, int cols, double target_rg, double block_side,
                                   int height_levels, RngStream& rng) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("generate_terrain: grid must be nonempty");
    if (!(target_rg >= 0.0))
        throw std::invalid_argument("generate_terrain: target rugosity must be >= 0");
    if (!(block_side > 0.0))
        throw std::invalid_argument("generate_terrain: block side must be positive");
    if (height_levels < 1)
        throw std::invalid_argument("generate_terrain: need at least one height level");
    if (height_levels == 1 && target_rg > 0.0)
        throw std::invalid_argument(
            "generate_terrain: positive rugosity infeasible with a single height level");

    TerrainMap map;
    map.rows = rows;
    map.cols = cols;
    map.block_side = block_side;
    map.heights.resize(static_cast<std::size_t>(rows) * cols);

    // Raw draw: uniform level index in {0, ..., height_levels - 1}.
    for (double& h : map.heights)
        h = static_cast<double>(rng.next_u64() % static_cast<std::uint64_t>(height_levels));

    if (target_rg == 0.0) {
        for (double& h : map.heights) h = 0.0;
        map.rugosity = 0.0;
        return map;
    }

    const double n = static_cast<double>(map.heights.size());
    double m = 0.0;
    for (double h : map.heights) m += h;
    m /= n;
    double ss = 0.0;
    for (double h : map.heights) ss += (h - m) * (h - m);
    const double raw_sd = std::sqrt(ss / n);
    if (raw_sd == 0.0)
        throw std::runtime_error(
            "generate_terrain: degenerate draw (all levels equal), cannot rescale; "
            "use a larger grid or more height levels");

    const double scale = target_rg * block_side / raw_sd;
    double lowest = std::numeric_limits<double>::infinity();
    for (double h : map.heights) lowest = std::min(lowest, h);
    for (double& h : map.heights) h = (h - lowest) * scale;
    map.rugosity = rugosity(map);
    return map;
}

/// Measured bac durations on a terrain, with the nominal duration tau.
struct ContactLog {
    std::vector<double> durations;
    double tau = 1.0;

    void validate() const {
        if (!(tau > 0.0)) throw std::invalid_argument("contact log: tau must be positive");
        for (double d : durations)
            if (!(d >= 0.0 && d <= tau))
                throw std::invalid_argument("contact log: durations must lie in [0, tau]");
    }
};

// Durations below this fraction of tau count as complete losses.
inline constexpr double kZeroDurationFraction = 1e-9;

struct NoiseEstimate {
    double b_hat = 0.0;
    int sample_count = 0;
    double tau = 1.0;
    /// Least-squares line through the empirical CDF on (0, tau); absent when
    /// fewer than two positive durations exist.
    std::optional<LineFit> cdf_fit;
};

inline constexpr int kMinEstimationSamples = 10;

/// Estimate the contact-noise level from a duration log: b_hat is the
/// fraction of complete losses; the linear CDF fit is reported alongside so
/// the G-shape assumption can be eyeballed (intercept ~ b_hat, slope
/// ~ (1 - b_hat)/tau when the model holds).
inline NoiseEstimate estimate_b(const ContactLog& log) {
    log.validate();
    const int n = static_cast<int>(log.durations.size());
    if (n < kMinEstimationSamples)
        throw std::invalid_argument("estimate_b: need at least 10 samples");

    const double zero_cut = kZeroDurationFraction * log.tau;
    std::vector<double> positive;
    positive.reserve(log.durations.size());
    int zeros = 0;
    for (double d : log.durations) {
        if (d < zero_cut)
            ++zeros;
        else
            positive.push_back(d);
    }

    NoiseEstimate est;
    est.sample_count = n;
    est.tau = log.tau;
    est.b_hat = static_cast<double>(zeros) / static_cast<double>(n);

    if (positive.size() >= 2) {
        std::sort(positive.begin(), positive.end());
        // Empirical CDF of the full sample evaluated at the positive order
        // statistics, plotting position (zeros + r - 0.5) / n.
        std::vector<double> cdf_values;
        cdf_values.reserve(positive.size());
        for (std::size_t r = 0; r < positive.size(); ++r)
            cdf_values.push_back((static_cast<double>(zeros) + static_cast<double>(r) + 0.5) /
                                 static_cast<double>(n));
        if (positive.front() < positive.back())
            est.cdf_fit = fit_line(positive, cdf_values);
    }
    return est;
}

} // namespace rugosim
