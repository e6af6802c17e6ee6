// Thrust profiles and the drag model.
//
// A ThrustProfile is the instantaneous thrust f(t) over one basic active
// contact (bac) of duration tau, treated as a periodic function of period
// tau. Internally every form is a piecewise-linear table on [0, tau] with an
// exact prefix-integral, so window integrals (including windows that wrap
// past the period boundary) are closed-form. A jump is permitted only at the
// period boundary, which is what the linear-ramp form needs.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rugosim {

class ThrustProfile {
  public:
    enum class Kind { constant, linear_ramp, tabulated };

    /// f(t) = level for all t.
    static ThrustProfile constant(double level, double tau) {
        check_tau(tau);
        check_finite(level, "constant level");
        return ThrustProfile(Kind::constant, tau, {0.0, tau}, {level, level});
    }

    /// f(t) = peak * t / tau on [0, tau); sawtooth with a jump at the boundary.
    static ThrustProfile linear_ramp(double peak, double tau) {
        check_tau(tau);
        check_finite(peak, "ramp peak");
        return ThrustProfile(Kind::linear_ramp, tau, {0.0, tau}, {0.0, peak});
    }

    /// Piecewise-linear periodic interpolation through (times[i], thrusts[i]),
    /// times strictly increasing within [0, tau). The segment joining the last
    /// sample to the first sample of the next period closes the function.
    static ThrustProfile tabulated(double tau, const std::vector<double>& times,
                                   const std::vector<double>& thrusts) {
        check_tau(tau);
        if (times.empty() || thrusts.empty())
            throw std::invalid_argument("thrust profile: empty samples");
        if (times.size() != thrusts.size())
            throw std::invalid_argument("thrust profile: times/thrusts size mismatch");
        for (std::size_t i = 0; i < times.size(); ++i) {
            check_finite(times[i], "sample time");
            check_finite(thrusts[i], "sample thrust");
            if (times[i] < 0.0 || times[i] >= tau)
                throw std::invalid_argument("thrust profile: sample time outside [0, tau)");
            if (i > 0 && times[i] <= times[i - 1])
                throw std::invalid_argument("thrust profile: sample times not strictly increasing");
        }

        std::vector<double> knots;
        std::vector<double> values;
        knots.reserve(times.size() + 2);
        values.reserve(times.size() + 2);
        if (times.front() > 0.0) {
            // Value at the period boundary comes from the segment joining the
            // last sample to the first sample one period later.
            const double span = tau + times.front() - times.back();
            const double frac = (tau - times.back()) / span;
            const double boundary = thrusts.back() + frac * (thrusts.front() - thrusts.back());
            knots.push_back(0.0);
            values.push_back(boundary);
            knots.insert(knots.end(), times.begin(), times.end());
            values.insert(values.end(), thrusts.begin(), thrusts.end());
            knots.push_back(tau);
            values.push_back(boundary);
        } else {
            knots = times;
            values = thrusts;
            knots.push_back(tau);
            values.push_back(thrusts.front()); // periodic continuation, f(tau) = f(0)
        }
        return ThrustProfile(Kind::tabulated, tau, std::move(knots), std::move(values));
    }

    Kind kind() const { return kind_; }
    double tau() const { return tau_; }

    /// f_n = (1/tau) * integral of f over one period.
    double nominal_thrust() const { return nominal_; }

    /// f(t mod tau).
    double value_at(double t) const {
        double r = std::fmod(t, tau_);
        if (r < 0.0) r += tau_;
        const std::size_t k = segment_index(r);
        const double u0 = knots_[k], u1 = knots_[k + 1];
        const double w = (r - u0) / (u1 - u0);
        return values_[k] + w * (values_[k + 1] - values_[k]);
    }

    /// Exact integral of f(t mod tau) over [a, b], 0 <= a <= b. The window may
    /// span any number of periods; whole periods contribute tau * f_n each.
    double integrate(double a, double b) const {
        if (!(a >= 0.0) || !(b >= a))
            throw std::invalid_argument("thrust profile: integration window must satisfy 0 <= a <= b");
        const double na = std::floor(a / tau_);
        const double nb = std::floor(b / tau_);
        const double ra = a - na * tau_;
        const double rb = b - nb * tau_;
        return (nb - na) * period_integral_ + prefix_at(rb) - prefix_at(ra);
    }

  private:
    ThrustProfile(Kind kind, double tau, std::vector<double> knots, std::vector<double> values)
        : kind_(kind), tau_(tau), knots_(std::move(knots)), values_(std::move(values)) {
        prefix_.resize(knots_.size(), 0.0);
        for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
            const double dt = knots_[k + 1] - knots_[k];
            prefix_[k + 1] = prefix_[k] + 0.5 * (values_[k] + values_[k + 1]) * dt;
        }
        period_integral_ = prefix_.back();
        nominal_ = period_integral_ / tau_;
        if (!std::isfinite(nominal_))
            throw std::invalid_argument("thrust profile: non-finite nominal thrust");
    }

    static void check_tau(double tau) {
        if (!(tau > 0.0) || !std::isfinite(tau))
            throw std::invalid_argument("thrust profile: tau must be positive and finite");
    }
    static void check_finite(double v, const char* what) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string("thrust profile: non-finite ") + what);
    }

    // Largest k with knots_[k] <= r, capped to the last segment.
    std::size_t segment_index(double r) const {
        const auto it = std::upper_bound(knots_.begin(), knots_.end(), r);
        std::size_t k = static_cast<std::size_t>(it - knots_.begin());
        if (k == 0) return 0;
        k -= 1;
        return std::min(k, knots_.size() - 2);
    }

    // Antiderivative F(r) = integral of f over [0, r], r in [0, tau].
    double prefix_at(double r) const {
        const std::size_t k = segment_index(r);
        const double u0 = knots_[k], u1 = knots_[k + 1];
        const double w = (r - u0) / (u1 - u0);
        const double fr = values_[k] + w * (values_[k + 1] - values_[k]);
        return prefix_[k] + 0.5 * (values_[k] + fr) * (r - u0);
    }

    Kind kind_;
    double tau_;
    std::vector<double> knots_;  // 0 = knots_[0] < ... < knots_[K] = tau
    std::vector<double> values_; // f at each knot; values_[K] may differ from values_[0]
    std::vector<double> prefix_; // prefix_[k] = integral of f over [0, knots_[k]]
    double period_integral_ = 0.0;
    double nominal_ = 0.0;
};

/// Effective-viscous thrust-to-velocity relation v = f / gamma.
struct DragModel {
    double gamma = 1.0;

    void validate() const {
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("drag model: gamma must be positive and finite");
    }

    double velocity(double thrust) const { return thrust / gamma; }
};

/// Nominal open-loop velocity on flat terrain, f_n / gamma.
inline double nominal_velocity(const ThrustProfile& profile, const DragModel& drag) {
    return drag.velocity(profile.nominal_thrust());
}

} // namespace rugosim
