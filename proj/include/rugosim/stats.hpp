// Small sample-statistics toolkit: moments, empirical CDF, interpolated
// quantiles, KS distance, least-squares line fit.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rugosim {

inline double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

/// Unbiased sample variance (n - 1 denominator).
inline double sample_variance(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

/// Standard error of the sample mean.
inline double mean_std_error(const std::vector<double>& xs) {
    return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

/// Large-sample standard error of the sample variance,
/// sqrt((m4 - s^4) / n) with m4 the fourth central moment.
inline double variance_std_error(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    if (n < 2) return 0.0;
    const double m = mean(xs);
    double m2 = 0.0, m4 = 0.0;
    for (double x : xs) {
        const double d = x - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    const double var = std::max(0.0, m4 - m2 * m2);
    return std::sqrt(var / static_cast<double>(n));
}

/// Interpolated quantile of a sorted sample: h = (n - 1) q + 1, linear
/// between the floor(h)-th and ceil(h)-th order statistics.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: q must be in [0, 1]");
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * q;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double w = h - static_cast<double>(lo);
    return sorted[lo] + w * (sorted[hi] - sorted[lo]);
}

/// Plotting positions (r - 0.5) / n paired with the sorted values.
inline std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("empirical_cdf: empty sample");
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<double, double>> cdf;
    cdf.reserve(xs.size());
    const double n = static_cast<double>(xs.size());
    for (std::size_t r = 0; r < xs.size(); ++r)
        cdf.emplace_back(xs[r], (static_cast<double>(r) + 0.5) / n);
    return cdf;
}

/// Kolmogorov-Smirnov distance between a sample and a reference CDF,
/// sup_x |F_n(x) - G(x)| evaluated at the sample points (both one-sided gaps).
template <typename Cdf>
double ks_distance(std::vector<double> xs, Cdf&& reference) {
    if (xs.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double g = reference(xs[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - g));
        d = std::max(d, std::abs(g - static_cast<double>(i) / n));
    }
    return d;
}

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    int points = 0;
};

/// Ordinary least squares y = intercept + slope * x. Requires >= 2 distinct x.
inline LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 paired points");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate x values");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.points = static_cast<int>(xs.size());
    return fit;
}

} // namespace rugosim
